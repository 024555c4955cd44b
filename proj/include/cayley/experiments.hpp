// Seeded girth experiments over random Cayley graphs, word-probability
// estimates and order statistics in W_n(2).
//
// Trial t of a run with master seed s draws its generators from
// Rng(derive_seed(s, t)), so results do not depend on the thread count or
// on which worker picks up which trial.

#ifndef CAYLEY_EXPERIMENTS_HPP_
#define CAYLEY_EXPERIMENTS_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/girth.hpp"
#include "cayley/groups.hpp"
#include "cayley/rng.hpp"
#include "cayley/words.hpp"

namespace cayley {

struct ExperimentConfig {
  Family family = Family::kPGL2;
  std::uint64_t parameter = 101;
  std::size_t k = 2;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_girth = 30;
  unsigned threads = 1;
  std::size_t memory_limit = 600'000'000;
  bool progress = false;  // one stderr line per 1000 trials
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> girth;  // empty when girth > max_girth
  std::string witness;
  std::optional<double> normalized;  // girth / log_{2k-1} |G|
};

struct GirthHistogram {
  std::string group;
  std::uint64_t parameter = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t max_girth = 0;
  std::map<std::size_t, std::size_t> counts;
  std::size_t odd_count = 0;
  std::size_t at_least_count = 0;
  std::vector<TrialRecord> records;

  std::size_t count(std::size_t girth) const {
    auto it = counts.find(girth);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Throws ResourceLimitError if any trial ran out of memory and
/// std::logic_error if any witness fails validation.
GirthHistogram run_girth_experiment(ExperimentConfig const& cfg);

nlohmann::json to_json(GirthHistogram const& h);
GirthHistogram histogram_from_json(nlohmann::json const& j);
std::string to_csv(GirthHistogram const& h);

/// Rounds to 12 significant digits, the precision of every printed real.
double round_significant(double x);

struct ProportionEstimate {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t successes = 0;
  std::size_t trials = 0;
};

/// Wilson score interval; z = 2.5758 gives 99% coverage.
ProportionEstimate wilson_interval(std::size_t successes, std::size_t trials,
                                   double z = 2.5758293035489004);

/// Fraction of uniform tuples at which w evaluates to the identity.
template <class Group>
ProportionEstimate estimate_word_prob(Group const& group, ReducedWord const& w,
                                      std::size_t trials, Rng& rng) {
  if (trials == 0) {
    throw std::invalid_argument("trials must be positive");
  }
  auto const e = group.identity();
  std::vector<typename Group::Element> tuple(w.arity(), e);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& g : tuple) g = group.sample(rng);
    if (evaluate(group, w, tuple) == e) ++hits;
  }
  return wilson_interval(hits, trials);
}

struct OrderStatistics {
  std::size_t height = 0;
  std::vector<unsigned> log2_orders;  // one per sample
  std::map<unsigned, std::size_t> histogram;
  double mean_ratio = 0.0;    // alpha-hat = mean of log2(order) / n
  double stddev_ratio = 0.0;  // sample standard deviation of the ratio
};

/// Orders of uniform elements of W_n(2).
OrderStatistics wn_order_experiment(std::size_t height, std::size_t trials,
                                    Rng& rng);

}  // namespace cayley

#endif  // CAYLEY_EXPERIMENTS_HPP_
