// Amoeba model of how a word's sections evolve down the binary tree.
//
// A DNA strand is a reduced word over bases a, b, c, ... (A = a^{-1}). At
// fission each base type gets one crossover bit; its mark sits after every
// forward occurrence and before every backward one. Scanning left to right
// with a copy index that flips at each active mark yields the first child
// (starting in copy 1) and, with the complementary start, the second. Child
// letters live over the doubled alphabet: (base x, copy c) is generator
// 2x + c with c in {0, 1} standing for copies 1 and 2.
//
// With W_n generators, activity bits are the generators' root bits and the
// children are the words computing the two level-1 sections of w(g).

#ifndef CAYLEY_GENETICS_HPP_
#define CAYLEY_GENETICS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cayley/groups.hpp"
#include "cayley/rng.hpp"
#include "cayley/words.hpp"

namespace cayley {

using Dna = ReducedWord;

/// One crossover bit per base type.
using ActivityAssignment = std::vector<bool>;

struct OffspringPair {
  Dna first;
  Dna second;
};

OffspringPair fission(Dna const& w, ActivityAssignment const& activity);

ActivityAssignment random_activity(std::size_t bases, Rng& rng);

std::size_t distinct_bases(Dna const& w);
bool is_free(Dna const& w);
/// chi(w) = |w| - number of distinct bases.
long complexity(Dna const& w);

/// Renames bases in order of first occurrence; arity becomes the number of
/// distinct bases. Freeness, complexity and fission statistics are
/// unchanged.
Dna relabel_bases(Dna const& w);

struct LineageStep {
  Dna dna;
  long complexity = 0;
};

/// Generation 0 is w itself; each step keeps the child of lower complexity
/// (the first child on ties), with fresh activity bits per generation.
std::vector<LineageStep> greedy_lineage(Dna const& w, std::size_t generations,
                                        Rng& rng);

struct PopulationOutcome {
  enum class Status { kFree, kNotFree, kCapExceeded };

  Status status = Status::kNotFree;
  /// First generation holding a free amoeba (kFree), otherwise the last
  /// generation fully simulated.
  std::size_t generation = 0;
};

inline constexpr std::size_t kDefaultPopulationCap = std::size_t{1} << 22;

/// Full population: every amoeba splits each generation with its own bits.
PopulationOutcome population_first_free(
    Dna const& w, std::size_t max_generations, Rng& rng,
    std::size_t population_cap = kDefaultPopulationCap);

/// exp(-(n/4) (1 - 2 chi_max / n)^2) with chi_max = length - 1; returns 1
/// when n <= 2 chi_max, where the tail estimate does not apply.
double p1_bound(std::size_t generations, std::size_t length);

/// min over 1 <= n0 < n of p1_bound(n0, length) + |W_{n - n0}|^{-1}, capped
/// at 1. Bounds P(w = 1 in W_n) for reduced w of the given length.
double wn_word_prob_bound(std::size_t height, std::size_t length,
                          std::size_t arity);

struct SectionDecomposition {
  bool parity = false;  // root bit of w(g)
  OffspringPair children;
  /// sections[2i + b] is the section of g_i at child b.
  std::vector<TreeAut> sections;
};

SectionDecomposition section_decomposition(BinaryTreeGroup const& group,
                                           Dna const& w,
                                           std::vector<TreeAut> const& tuple);

}  // namespace cayley

#endif  // CAYLEY_GENETICS_HPP_
