// Word-probability bounds and the exact power-word count in Sym(n).

#ifndef CAYLEY_BOUNDS_HPP_
#define CAYLEY_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

using BigRational = boost::multiprecision::cpp_rational;

/// Number of sigma in Sym(n) with sigma^l = 1, from
///   c(m) = sum_{d | l, d <= m} (m-1)!/(m-d)! * c(m-d),  c(0) = 1,
/// which conditions on the length d of the cycle through a fixed point.
boost::multiprecision::cpp_int power_solution_count_sn(std::size_t n,
                                                       std::size_t l);

/// P(a^l = 1) at a uniform element of Sym(n), exactly.
BigRational exact_power_word_prob_sn(std::size_t n, std::size_t l);

/// (2l/n)^{n/(2l)}; requires 2l < n.
double sn_word_prob_bound(std::size_t n, std::size_t length);

/// (1/n)^{n/l}: the power-word lower bound that shows the S_n estimate is
/// nearly tight. Counts permutations made of n/l disjoint l-cycles, so it is
/// a valid bound only when l divides n (it fails at n=8, l=5).
double sn_power_word_lower_bound(std::size_t n, std::size_t l);

/// Leading term l/p of the PGL_2(p) estimate; the O(p^-2) part is not
/// included. Requires length >= 1.
double pgl_word_prob_bound(std::uint64_t p, std::size_t length);

enum class UnionBoundKind {
  kPglClosedForm,  // floor(log_{d-1} p - 2 log_{d-1} log_{d-1} p)
  kPglUnion,       // largest l with W(l) * l / p < 1
  kSymUnion,       // largest l with W(l) * (2l/n)^{n/(2l)} < 1, 2l < n
};

/// Number of nonempty reduced words of length <= l in d = 2k letters.
double reduced_words_up_to(std::size_t degree, std::size_t length);

/// Girth guaranteed by the union bound for degree-d Cayley graphs;
/// `parameter` is p for the PGL kinds and n for kSymUnion.
std::size_t union_bound_threshold(std::size_t degree, UnionBoundKind kind,
                                  double parameter);

}  // namespace cayley

#endif  // CAYLEY_BOUNDS_HPP_
