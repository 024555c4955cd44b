// Free-group words: reduction, enumeration, sampling, evaluation and
// substitution.
//
// Letters are ordered a < A < b < B < ... (generator first, forward before
// inverse); every enumeration and tie-break in the library uses this order.
// In text, a-z are generators and A-Z their inverses.

#ifndef CAYLEY_WORDS_HPP_
#define CAYLEY_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/rng.hpp"

namespace cayley {

struct Letter {
  std::uint32_t generator = 0;  // 0-based
  bool inverse = false;

  /// Position in the letter order: 2 * generator + inverse.
  std::uint32_t code() const noexcept { return 2 * generator + (inverse ? 1 : 0); }
  static Letter from_code(std::uint32_t code) noexcept {
    return Letter{code >> 1, (code & 1U) != 0};
  }
  Letter inverted() const noexcept { return Letter{generator, !inverse}; }

  friend bool operator==(Letter const&, Letter const&) = default;
};

/// A freely reduced word over an alphabet of `arity` generators.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(std::size_t arity) : arity_(arity) {}
  /// Reduces `letters`; throws if a generator is out of range.
  ReducedWord(std::size_t arity, std::vector<Letter> letters);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  ReducedWord inverse() const;
  bool is_cyclically_reduced() const noexcept;

  friend bool operator==(ReducedWord const&, ReducedWord const&) = default;
  /// Lexicographic order on letter codes; a proper prefix sorts first.
  friend bool lex_less(ReducedWord const& x, ReducedWord const& y);

 private:
  std::size_t arity_ = 0;
  std::vector<Letter> letters_;
};

ReducedWord free_reduce(std::size_t arity, std::span<Letter const> letters);

/// Strips cancelling first/last pairs. `conjugator` receives c with
/// w = c * core * c^{-1}.
ReducedWord cyclic_reduce(ReducedWord const& w);
ReducedWord cyclic_reduce(ReducedWord const& w, ReducedWord& conjugator);

/// Lexicographically least word among the cyclic rotations of w and of
/// w^{-1}. Requires w cyclically reduced; every rotation then is too.
ReducedWord least_cyclic_form(ReducedWord const& w);

/// Reduced form of u * v^{-1}.
ReducedWord concat_inverse_reduce(ReducedWord const& u, ReducedWord const& v);

ReducedWord concat(ReducedWord const& u, ReducedWord const& v);

/// Number of reduced words of length exactly `length`: 2k(2k-1)^{l-1}.
std::uint64_t reduced_word_count(std::size_t arity, std::size_t length);

/// Lexicographic odometer over reduced words of a fixed length; O(length)
/// state.
class ReducedWordEnumerator {
 public:
  ReducedWordEnumerator(std::size_t arity, std::size_t length);

  bool done() const noexcept { return done_; }
  ReducedWord const& current() const noexcept { return current_; }
  void advance();

 private:
  std::vector<std::uint32_t> codes_;
  std::uint32_t alphabet_;
  bool done_ = false;
  ReducedWord current_;

  void rebuild();
};

std::vector<ReducedWord> enumerate_reduced(std::size_t arity,
                                           std::size_t length);
std::vector<ReducedWord> enumerate_cyclically_reduced(std::size_t arity,
                                                      std::size_t length);

ReducedWord random_reduced_word(std::size_t arity, std::size_t length,
                                Rng& rng);

/// a_i^m; `generator` is 0-based.
ReducedWord power_word(std::size_t arity, std::uint32_t generator,
                       std::size_t exponent);

/// Substitutes letter i^{+-1} by replacements[i]^{+-1} and reduces while
/// splicing. All replacements share one arity, which becomes the result's.
ReducedWord substitute(ReducedWord const& w,
                       std::span<ReducedWord const> replacements);

/// Half-length s of the random substitution: least s with
/// length * 2k' * (2k' - 1)^{-(s-1)} < 1.
std::size_t substitution_half_length(std::size_t length,
                                     std::size_t target_arity);

/// Replacement words omega_i = L_i x_i R_i over `target_arity` letters
/// (|L_i| = |R_i| = s) for which substitute(w, omega) is nonempty.
std::vector<ReducedWord> build_substitution(ReducedWord const& w,
                                            std::size_t target_arity,
                                            Rng& rng);

/// Parses a-z / A-Z text and reduces it. With arity == 0 the arity is the
/// highest generator used plus one.
ReducedWord parse_word(std::string_view text, std::size_t arity = 0);
std::string format_word(ReducedWord const& w);

/// Packed word: a leading 1 bit followed by `bits_per_letter` bits per
/// letter, most significant letter first. For a fixed length the numeric
/// order agrees with lexicographic order.
class WordCode {
 public:
  static unsigned bits_per_letter(std::size_t arity);
  static std::size_t max_length(std::size_t arity);

  static std::uint64_t empty() noexcept { return 1; }
  static std::uint64_t append(std::uint64_t code, std::uint32_t letter_code,
                              unsigned bits) noexcept {
    return (code << bits) | letter_code;
  }
  static std::uint64_t encode(ReducedWord const& w);
  static ReducedWord decode(std::uint64_t code, std::size_t arity);
  static std::size_t length(std::uint64_t code, std::size_t arity);
};

/// Left-to-right product of the word evaluated at `tuple`.
template <class Group>
typename Group::Element evaluate(Group const& group, ReducedWord const& w,
                                 std::span<typename Group::Element const> tuple) {
  if (tuple.size() != w.arity()) {
    throw std::invalid_argument("tuple size does not match word arity");
  }
  typename Group::Element acc = group.identity();
  typename Group::Element tmp = acc;
  for (Letter const l : w) {
    if (l.inverse) {
      group.multiply_into(acc, group.invert(tuple[l.generator]), tmp);
    } else {
      group.multiply_into(acc, tuple[l.generator], tmp);
    }
    std::swap(acc, tmp);
  }
  return acc;
}

template <class Group>
typename Group::Element evaluate(Group const& group, ReducedWord const& w,
                                 std::vector<typename Group::Element> const& tuple) {
  return evaluate(group, w,
                  std::span<typename Group::Element const>(tuple.data(), tuple.size()));
}

}  // namespace cayley

#endif  // CAYLEY_WORDS_HPP_
