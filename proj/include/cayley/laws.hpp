// Laws of small groups and the unipotent ping-pong identity in SL_2.

#ifndef CAYLEY_LAWS_HPP_
#define CAYLEY_LAWS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/girth.hpp"
#include "cayley/words.hpp"

namespace cayley {

/// The node budget of a law search ran out.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LawResult {
  bool found = false;
  /// Law length when found, otherwise max_length + 1 (a lower bound).
  std::size_t length = 0;
  ReducedWord word;
  std::uint64_t nodes = 0;
};

namespace detail {

// Every k-tuple of elements, in lexicographic order of element indices.
template <class Group>
std::vector<std::vector<typename Group::Element>> all_tuples(
    Group const& group, std::size_t k) {
  auto const elems = group.elements();
  std::vector<std::vector<typename Group::Element>> out;
  std::vector<std::size_t> index(k, 0);
  while (true) {
    std::vector<typename Group::Element> t;
    t.reserve(k);
    for (std::size_t i : index) t.push_back(elems[i]);
    out.push_back(std::move(t));
    std::size_t pos = k;
    while (pos > 0 && ++index[pos - 1] == elems.size()) {
      index[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

}  // namespace detail

/// Shortest nontrivial word in k letters that is trivial at every k-tuple
/// of `group`. Depth-first over the reduced-word tree with iterative
/// deepening, so the first hit is the lexicographically least law of
/// minimal length. Running products are kept for a small probe set of
/// tuples; a word surviving the probes is checked against all tuples.
template <class Group>
LawResult shortest_law(Group const& group, std::size_t k,
                       std::size_t max_length,
                       std::uint64_t node_cap = 2'000'000'000ULL) {
  using Element = typename Group::Element;
  if (k == 0) {
    throw std::invalid_argument("shortest_law needs k >= 1");
  }
  auto const tuples = detail::all_tuples(group, k);
  std::size_t const probe_count = std::min<std::size_t>(16, tuples.size());
  std::vector<std::size_t> probes;
  for (std::size_t i = 0; i < probe_count; ++i) {
    probes.push_back(i * tuples.size() / probe_count);
  }
  // probe_letters[j][code]: value of letter `code` at probe tuple j.
  std::vector<std::vector<Element>> probe_letters(probe_count);
  for (std::size_t j = 0; j < probe_count; ++j) {
    for (Element const& g : tuples[probes[j]]) {
      probe_letters[j].push_back(g);
      probe_letters[j].push_back(group.invert(g));
    }
  }
  Element const e = group.identity();
  auto const alphabet = static_cast<std::uint32_t>(2 * k);

  LawResult result;
  std::vector<std::vector<Element>> path(max_length + 1,
                                         std::vector<Element>(probe_count, e));
  std::vector<std::uint32_t> codes(max_length, 0);

  auto full_check = [&](std::size_t length) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < length; ++i) {
      letters.push_back(Letter::from_code(codes[i]));
    }
    ReducedWord const w(k, std::move(letters));
    for (auto const& t : tuples) {
      if (!(evaluate(group, w, t) == e)) return false;
    }
    result.word = w;
    return true;
  };

  for (std::size_t target = 1; target <= max_length; ++target) {
    // Explicit stack: codes[depth] is the letter being tried at depth.
    std::size_t depth = 0;
    codes[0] = 0;
    while (true) {
      std::uint32_t const c = codes[depth];
      if (c >= alphabet) {
        if (depth == 0) break;
        --depth;
        ++codes[depth];
        continue;
      }
      if (depth > 0 && c == (codes[depth - 1] ^ 1U)) {
        ++codes[depth];
        continue;
      }
      if (++result.nodes > node_cap) {
        throw SearchLimitError("shortest_law node cap exceeded at length " +
                               std::to_string(target));
      }
      for (std::size_t j = 0; j < probe_count; ++j) {
        group.multiply_into(path[depth][j], probe_letters[j][c],
                            path[depth + 1][j]);
      }
      if (depth + 1 == target) {
        bool const cyclic =
            target < 2 || codes[0] != (c ^ 1U);
        bool survives = cyclic;
        for (std::size_t j = 0; survives && j < probe_count; ++j) {
          survives = path[depth + 1][j] == e;
        }
        if (survives && full_check(target)) {
          result.found = true;
          result.length = target;
          return result;
        }
        ++codes[depth];
      } else {
        ++depth;
        codes[depth] = 0;
      }
    }
  }
  result.length = max_length + 1;
  return result;
}

using Poly = std::vector<boost::multiprecision::cpp_int>;  // coeffs by degree
using PolyMatrix = std::array<Poly, 4>;                      // row-major 2x2

/// prod_i [[1,0],[l_i x,1]] [[1,k_i x],[0,1]] with integer coefficients.
PolyMatrix ping_pong_product(
    std::vector<std::pair<long, long>> const& exponents);

/// True iff the (2,2) entry of the product has degree exactly 2r with
/// leading coefficient prod l_i k_i and every other entry has degree
/// <= 2r - 1. Exponents must be nonzero.
bool verify_ping_pong_form(
    std::vector<std::pair<long, long>> const& exponents);

/// Degree of a polynomial; -1 for zero.
long poly_degree(Poly const& p);

}  // namespace cayley

#endif  // CAYLEY_LAWS_HPP_
