#include "cayley/genetics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cayley {

namespace {

Dna scan_child(Dna const& w, ActivityAssignment const& activity,
               std::uint32_t start) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  std::uint32_t copy = start;
  for (Letter const l : w) {
    bool const flip = activity[l.generator];
    if (l.inverse && flip) {
      copy ^= 1U;
    }
    letters.push_back(Letter{2 * l.generator + copy, l.inverse});
    if (!l.inverse && flip) {
      copy ^= 1U;
    }
  }
  return Dna(2 * w.arity(), std::move(letters));
}

}  // namespace

OffspringPair fission(Dna const& w, ActivityAssignment const& activity) {
  if (activity.size() < w.arity()) {
    throw std::invalid_argument("activity assignment shorter than alphabet");
  }
  return OffspringPair{scan_child(w, activity, 0), scan_child(w, activity, 1)};
}

ActivityAssignment random_activity(std::size_t bases, Rng& rng) {
  ActivityAssignment out(bases);
  for (std::size_t i = 0; i < bases; ++i) {
    out[i] = rng.bit();
  }
  return out;
}

std::size_t distinct_bases(Dna const& w) {
  std::vector<std::uint32_t> bases;
  bases.reserve(w.size());
  for (Letter const l : w) {
    bases.push_back(l.generator);
  }
  std::sort(bases.begin(), bases.end());
  return static_cast<std::size_t>(
      std::unique(bases.begin(), bases.end()) - bases.begin());
}

bool is_free(Dna const& w) { return distinct_bases(w) == w.size(); }

long complexity(Dna const& w) {
  return static_cast<long>(w.size()) - static_cast<long>(distinct_bases(w));
}

Dna relabel_bases(Dna const& w) {
  std::unordered_map<std::uint32_t, std::uint32_t> names;
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter const l : w) {
    auto [it, fresh] =
        names.try_emplace(l.generator, static_cast<std::uint32_t>(names.size()));
    letters.push_back(Letter{it->second, l.inverse});
  }
  return Dna(names.size(), std::move(letters));
}

std::vector<LineageStep> greedy_lineage(Dna const& w, std::size_t generations,
                                        Rng& rng) {
  std::vector<LineageStep> out;
  out.reserve(generations + 1);
  Dna current = relabel_bases(w);
  out.push_back({current, complexity(current)});
  for (std::size_t g = 0; g < generations; ++g) {
    OffspringPair const kids =
        fission(current, random_activity(current.arity(), rng));
    long const c1 = complexity(kids.first);
    long const c2 = complexity(kids.second);
    current = relabel_bases(c2 < c1 ? kids.second : kids.first);
    out.push_back({current, std::min(c1, c2)});
  }
  return out;
}

PopulationOutcome population_first_free(Dna const& w,
                                        std::size_t max_generations, Rng& rng,
                                        std::size_t population_cap) {
  if (population_cap == 0) {
    throw std::invalid_argument("population cap must be positive");
  }
  PopulationOutcome outcome;
  if (is_free(w)) {
    outcome.status = PopulationOutcome::Status::kFree;
    return outcome;
  }
  std::vector<Dna> population{relabel_bases(w)};
  std::vector<Dna> next;
  for (std::size_t g = 1; g <= max_generations; ++g) {
    if (population.size() * 2 > population_cap) {
      outcome.status = PopulationOutcome::Status::kCapExceeded;
      outcome.generation = g - 1;
      return outcome;
    }
    next.clear();
    next.reserve(population.size() * 2);
    for (Dna const& amoeba : population) {
      OffspringPair kids =
          fission(amoeba, random_activity(amoeba.arity(), rng));
      if (is_free(kids.first) || is_free(kids.second)) {
        outcome.status = PopulationOutcome::Status::kFree;
        outcome.generation = g;
        return outcome;
      }
      next.push_back(relabel_bases(kids.first));
      next.push_back(relabel_bases(kids.second));
    }
    population.swap(next);
  }
  outcome.status = PopulationOutcome::Status::kNotFree;
  outcome.generation = max_generations;
  return outcome;
}

double p1_bound(std::size_t generations, std::size_t length) {
  if (generations < 1 || length < 1) {
    throw std::invalid_argument("p1_bound needs n >= 1 and length >= 1");
  }
  double const n = static_cast<double>(generations);
  double const chi_max = static_cast<double>(length) - 1.0;
  if (n <= 2.0 * chi_max) {
    return 1.0;
  }
  double const gap = 1.0 - 2.0 * chi_max / n;
  return std::exp(-n / 4.0 * gap * gap);
}

double wn_word_prob_bound(std::size_t height, std::size_t length,
                          std::size_t /*arity*/) {
  double best = 1.0;
  for (std::size_t n0 = 1; n0 < height; ++n0) {
    double const levels = static_cast<double>(height - n0);
    double const inv_size = std::exp2(-(std::exp2(levels) - 1.0));
    best = std::min(best, p1_bound(n0, length) + inv_size);
  }
  return best;
}

SectionDecomposition section_decomposition(BinaryTreeGroup const& group,
                                           Dna const& w,
                                           std::vector<TreeAut> const& tuple) {
  if (tuple.size() != w.arity()) {
    throw std::invalid_argument("one generator per base required");
  }
  SectionDecomposition out;
  ActivityAssignment activity(tuple.size());
  out.sections.reserve(2 * tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!group.contains(tuple[i])) {
      throw std::invalid_argument("generator height mismatch");
    }
    activity[i] = tuple[i].root_active();
    out.sections.push_back(tuple[i].section(0));
    out.sections.push_back(tuple[i].section(1));
  }
  for (Letter const l : w) {
    out.parity = out.parity != activity[l.generator];
  }
  out.children = fission(w, activity);
  return out;
}

}  // namespace cayley
