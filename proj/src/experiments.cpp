#include "cayley/experiments.hpp"

#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cayley {

namespace {

struct TrialOutcome {
  TrialRecord record;
  bool resource_error = false;
  std::string error;
};

template <class Group>
TrialOutcome run_trial(Group const& group, ExperimentConfig const& cfg,
                       double log_base_size, std::size_t trial) {
  TrialOutcome out;
  out.record.trial = trial;
  out.record.seed = derive_seed(cfg.seed, trial);
  Rng rng(out.record.seed);
  std::vector<typename Group::Element> gens;
  gens.reserve(cfg.k);
  for (std::size_t i = 0; i < cfg.k; ++i) {
    gens.push_back(group.sample(rng));
  }
  GirthLimits limits;
  limits.max_girth = cfg.max_girth;
  limits.memory_limit = cfg.memory_limit;
  GirthResult result;
  try {
    result = girth(group, gens, limits);
  } catch (ResourceLimitError const& e) {
    out.resource_error = true;
    out.error = e.what();
    return out;
  }
  if (!witness_is_valid(group, gens, result)) {
    throw std::logic_error("invalid girth witness in trial " +
                           std::to_string(trial));
  }
  if (result.exact()) {
    out.record.girth = result.length;
    out.record.witness = format_word(result.witness);
    if (log_base_size > 0.0) {
      out.record.normalized = round_significant(
          static_cast<double>(result.length) / log_base_size);
    }
  }
  return out;
}

template <class Group>
std::vector<TrialOutcome> run_all(Group const& group,
                                  ExperimentConfig const& cfg) {
  double const log_base_size =
      cfg.k >= 2 ? group.size().log2 / std::log2(2.0 * cfg.k - 1.0) : 0.0;
  std::vector<TrialOutcome> outcomes(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex error_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      std::size_t const t = next.fetch_add(1);
      if (t >= cfg.trials) return;
      try {
        outcomes[t] = run_trial(group, cfg, log_base_size, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failure) failure = std::current_exception();
        next.store(cfg.trials);
        return;
      }
      std::size_t const finished = done.fetch_add(1) + 1;
      if (cfg.progress && finished % 1000 == 0) {
        std::lock_guard<std::mutex> lock(error_mutex);
        std::cerr << "completed " << finished << " / " << cfg.trials
                  << " trials\n";
      }
    }
  };

  unsigned const threads = std::max(1U, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

}  // namespace

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

GirthHistogram run_girth_experiment(ExperimentConfig const& cfg) {
  if (cfg.trials == 0) {
    throw std::invalid_argument("trials must be >= 1");
  }
  if (cfg.k == 0 || cfg.k > 26) {
    throw std::invalid_argument("k must be in [1, 26]");
  }
  GroupContext const ctx = GroupContext::make(cfg.family, cfg.parameter);
  std::vector<TrialOutcome> const outcomes =
      ctx.visit([&](auto const& group) { return run_all(group, cfg); });

  GirthHistogram h;
  h.group = family_name(cfg.family);
  h.parameter = cfg.parameter;
  h.k = cfg.k;
  h.trials = cfg.trials;
  h.seed = cfg.seed;
  h.max_girth = cfg.max_girth;
  h.records.reserve(outcomes.size());
  std::size_t failed = 0;
  std::string first_error;
  for (TrialOutcome const& o : outcomes) {
    if (o.resource_error) {
      if (failed++ == 0) first_error = o.error;
      continue;
    }
    TrialRecord const& r = o.record;
    if (r.girth) {
      ++h.counts[*r.girth];
      if (*r.girth % 2 == 1) ++h.odd_count;
    } else {
      ++h.at_least_count;
    }
    h.records.push_back(r);
  }
  if (failed > 0) {
    throw ResourceLimitError(std::to_string(failed) +
                                 " trial(s) hit the memory limit; first: " +
                                 first_error,
                             0);
  }
  return h;
}

nlohmann::json to_json(GirthHistogram const& h) {
  nlohmann::json j;
  j["group"] = h.group;
  j["param"] = h.parameter;
  j["k"] = h.k;
  j["trials"] = h.trials;
  j["seed"] = h.seed;
  j["max_girth"] = h.max_girth;
  nlohmann::json hist = nlohmann::json::object();
  for (auto const& [g, c] : h.counts) hist[std::to_string(g)] = c;
  j["histogram"] = hist;
  j["odd_count"] = h.odd_count;
  j["at_least_count"] = h.at_least_count;
  nlohmann::json records = nlohmann::json::array();
  for (TrialRecord const& r : h.records) {
    nlohmann::json rec;
    rec["trial"] = r.trial;
    rec["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json(nullptr);
    rec["witness"] = r.witness;
    rec["normalized"] =
        r.normalized ? nlohmann::json(*r.normalized) : nlohmann::json(nullptr);
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  return j;
}

GirthHistogram histogram_from_json(nlohmann::json const& j) {
  GirthHistogram h;
  h.group = j.at("group").get<std::string>();
  h.parameter = j.at("param").get<std::uint64_t>();
  h.k = j.at("k").get<std::size_t>();
  h.trials = j.at("trials").get<std::size_t>();
  h.seed = j.at("seed").get<std::uint64_t>();
  h.max_girth = j.at("max_girth").get<std::size_t>();
  for (auto const& [key, value] : j.at("histogram").items()) {
    h.counts[std::stoul(key)] = value.get<std::size_t>();
  }
  h.odd_count = j.at("odd_count").get<std::size_t>();
  h.at_least_count = j.at("at_least_count").get<std::size_t>();
  for (auto const& rec : j.at("records")) {
    TrialRecord r;
    r.trial = rec.at("trial").get<std::size_t>();
    r.seed = derive_seed(h.seed, r.trial);
    if (!rec.at("girth").is_null()) r.girth = rec.at("girth").get<std::size_t>();
    r.witness = rec.at("witness").get<std::string>();
    if (!rec.at("normalized").is_null()) {
      r.normalized = rec.at("normalized").get<double>();
    }
    h.records.push_back(std::move(r));
  }
  return h;
}

std::string to_csv(GirthHistogram const& h) {
  std::ostringstream os;
  os << "trial,seed,girth,witness,normalized\n";
  char buf[64];
  for (TrialRecord const& r : h.records) {
    os << r.trial << ',' << r.seed << ',';
    if (r.girth) os << *r.girth;
    os << ',' << r.witness << ',';
    if (r.normalized) {
      std::snprintf(buf, sizeof buf, "%.12g", *r.normalized);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

ProportionEstimate wilson_interval(std::size_t successes, std::size_t trials,
                                   double z) {
  ProportionEstimate out;
  out.successes = successes;
  out.trials = trials;
  double const n = static_cast<double>(trials);
  double const phat = static_cast<double>(successes) / n;
  out.estimate = phat;
  double const z2 = z * z;
  double const denom = 1.0 + z2 / n;
  double const centre = (phat + z2 / (2.0 * n)) / denom;
  double const half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  out.lower = std::max(0.0, centre - half);
  out.upper = std::min(1.0, centre + half);
  return out;
}

OrderStatistics wn_order_experiment(std::size_t height, std::size_t trials,
                                    Rng& rng) {
  if (height == 0 || height > 24) {
    throw std::invalid_argument("height must be in [1, 24]");
  }
  if (trials == 0) {
    throw std::invalid_argument("trials must be positive");
  }
  BinaryTreeGroup const group(static_cast<unsigned>(height));
  OrderStatistics out;
  out.height = height;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t const order = group.order(group.sample(rng));
    auto const lg = static_cast<unsigned>(std::countr_zero(order));
    out.log2_orders.push_back(lg);
    ++out.histogram[lg];
    double const ratio = static_cast<double>(lg) / static_cast<double>(height);
    sum += ratio;
    sum_sq += ratio * ratio;
  }
  double const n = static_cast<double>(trials);
  out.mean_ratio = sum / n;
  out.stddev_ratio =
      trials > 1 ? std::sqrt(std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0)))
                 : 0.0;
  return out;
}

}  // namespace cayley
