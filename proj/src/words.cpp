#include "cayley/words.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace cayley {

namespace {

constexpr std::size_t kMaxTextArity = 26;
constexpr int kSubstitutionRetries = 10000;

// Stack-based reduction: each letter either cancels the top or is pushed.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == l.inverted()) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

ReducedWord::ReducedWord(std::size_t arity, std::vector<Letter> letters)
    : arity_(arity) {
  letters_.reserve(letters.size());
  for (Letter const l : letters) {
    if (l.generator >= arity) {
      throw std::invalid_argument("letter outside the word's alphabet");
    }
    push_reduced(letters_, l);
  }
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord out(arity_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverted());
  }
  return out;
}

bool ReducedWord::is_cyclically_reduced() const noexcept {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverted();
}

bool lex_less(ReducedWord const& x, ReducedWord const& y) {
  return std::lexicographical_compare(
      x.begin(), x.end(), y.begin(), y.end(),
      [](Letter l, Letter r) { return l.code() < r.code(); });
}

ReducedWord free_reduce(std::size_t arity, std::span<Letter const> letters) {
  return ReducedWord(arity, std::vector<Letter>(letters.begin(), letters.end()));
}

ReducedWord cyclic_reduce(ReducedWord const& w) {
  ReducedWord conjugator;
  return cyclic_reduce(w, conjugator);
}

ReducedWord least_cyclic_form(ReducedWord const& w) {
  if (!w.is_cyclically_reduced()) {
    throw std::invalid_argument("least_cyclic_form needs a cyclically reduced word");
  }
  ReducedWord best = w;
  std::size_t const n = w.size();
  for (ReducedWord const& base : {w, w.inverse()}) {
    std::vector<Letter> rotated(n);
    for (std::size_t shift = 0; shift < n; ++shift) {
      for (std::size_t i = 0; i < n; ++i) rotated[i] = base[(i + shift) % n];
      ReducedWord candidate(w.arity(), rotated);
      if (lex_less(candidate, best)) best = std::move(candidate);
    }
  }
  return best;
}

ReducedWord cyclic_reduce(ReducedWord const& w, ReducedWord& conjugator) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  auto const& letters = w.letters();
  conjugator = ReducedWord(
      w.arity(), std::vector<Letter>(letters.begin(), letters.begin() + lo));
  return ReducedWord(w.arity(), std::vector<Letter>(letters.begin() + lo,
                                                    letters.begin() + hi));
}

ReducedWord concat(ReducedWord const& u, ReducedWord const& v) {
  if (u.arity() != v.arity()) {
    throw std::invalid_argument("word arity mismatch");
  }
  std::vector<Letter> letters = u.letters();
  for (Letter const l : v) {
    push_reduced(letters, l);
  }
  return ReducedWord(u.arity(), std::move(letters));
}

ReducedWord concat_inverse_reduce(ReducedWord const& u, ReducedWord const& v) {
  if (u.arity() != v.arity()) {
    throw std::invalid_argument("word arity mismatch");
  }
  return concat(u, v.inverse());
}

std::uint64_t reduced_word_count(std::size_t arity, std::size_t length) {
  if (length == 0) {
    return 1;
  }
  std::uint64_t count = 2 * arity;
  for (std::size_t i = 1; i < length; ++i) {
    count *= 2 * arity - 1;
  }
  return count;
}

////////////////////////////////////////////////////////////////////////////
// Enumeration
////////////////////////////////////////////////////////////////////////////

ReducedWordEnumerator::ReducedWordEnumerator(std::size_t arity,
                                             std::size_t length)
    : codes_(length, 0),
      alphabet_(static_cast<std::uint32_t>(2 * arity)),
      current_(arity) {
  if (arity == 0 && length > 0) {
    done_ = true;
    return;
  }
  // Smallest code at each position: 0, unless it cancels the previous one.
  for (std::size_t i = 1; i < length; ++i) {
    codes_[i] = (codes_[i - 1] ^ 1U) == 0 ? 1 : 0;
  }
  rebuild();
}

void ReducedWordEnumerator::rebuild() {
  std::vector<Letter> letters;
  letters.reserve(codes_.size());
  for (std::uint32_t c : codes_) {
    letters.push_back(Letter::from_code(c));
  }
  current_ = ReducedWord(current_.arity(), std::move(letters));
}

void ReducedWordEnumerator::advance() {
  if (done_) {
    return;
  }
  std::size_t i = codes_.size();
  while (i > 0) {
    std::size_t const pos = i - 1;
    std::uint32_t next = codes_[pos] + 1;
    if (pos > 0 && next == (codes_[pos - 1] ^ 1U)) {
      ++next;
    }
    if (next < alphabet_) {
      codes_[pos] = next;
      for (std::size_t j = pos + 1; j < codes_.size(); ++j) {
        codes_[j] = (codes_[j - 1] ^ 1U) == 0 ? 1 : 0;
      }
      rebuild();
      return;
    }
    --i;
  }
  done_ = true;
}

std::vector<ReducedWord> enumerate_reduced(std::size_t arity,
                                           std::size_t length) {
  std::vector<ReducedWord> out;
  for (ReducedWordEnumerator e(arity, length); !e.done(); e.advance()) {
    out.push_back(e.current());
  }
  return out;
}

std::vector<ReducedWord> enumerate_cyclically_reduced(std::size_t arity,
                                                      std::size_t length) {
  std::vector<ReducedWord> out;
  if (length == 0) {
    return out;
  }
  for (ReducedWordEnumerator e(arity, length); !e.done(); e.advance()) {
    if (e.current().is_cyclically_reduced()) {
      out.push_back(e.current());
    }
  }
  return out;
}

ReducedWord random_reduced_word(std::size_t arity, std::size_t length,
                                Rng& rng) {
  std::vector<Letter> letters;
  letters.reserve(length);
  std::uint64_t const alphabet = 2 * arity;
  for (std::size_t i = 0; i < length; ++i) {
    std::uint32_t code;
    if (i == 0) {
      code = static_cast<std::uint32_t>(rng.below(alphabet));
    } else {
      std::uint32_t const forbidden = letters.back().code() ^ 1U;
      code = static_cast<std::uint32_t>(rng.below(alphabet - 1));
      if (code >= forbidden) {
        ++code;
      }
    }
    letters.push_back(Letter::from_code(code));
  }
  return ReducedWord(arity, std::move(letters));
}

ReducedWord power_word(std::size_t arity, std::uint32_t generator,
                       std::size_t exponent) {
  return ReducedWord(arity,
                     std::vector<Letter>(exponent, Letter{generator, false}));
}

////////////////////////////////////////////////////////////////////////////
// Substitution
////////////////////////////////////////////////////////////////////////////

ReducedWord substitute(ReducedWord const& w,
                       std::span<ReducedWord const> replacements) {
  if (replacements.size() != w.arity()) {
    throw std::invalid_argument("one replacement per generator required");
  }
  std::size_t const target = replacements.empty() ? 0 : replacements[0].arity();
  for (ReducedWord const& r : replacements) {
    if (r.arity() != target) {
      throw std::invalid_argument("replacements must share one arity");
    }
  }
  std::vector<Letter> out;
  for (Letter const l : w) {
    ReducedWord const& r = replacements[l.generator];
    if (l.inverse) {
      for (auto it = r.letters().rbegin(); it != r.letters().rend(); ++it) {
        push_reduced(out, it->inverted());
      }
    } else {
      for (Letter const x : r) {
        push_reduced(out, x);
      }
    }
  }
  return ReducedWord(target, std::move(out));
}

std::size_t substitution_half_length(std::size_t length,
                                     std::size_t target_arity) {
  if (target_arity < 2) {
    throw std::invalid_argument("target arity must be >= 2");
  }
  double const d = 2.0 * static_cast<double>(target_arity);
  double const base = static_cast<double>(length) * d;
  std::size_t s = 1;
  // length * d * (d - 1)^{-(s-1)} < 1, evaluated exactly in integers.
  std::uint64_t power = 1;
  auto const lhs = static_cast<std::uint64_t>(base);
  while (lhs >= power) {
    ++s;
    power *= static_cast<std::uint64_t>(d) - 1;
  }
  return s;
}

std::vector<ReducedWord> build_substitution(ReducedWord const& w,
                                            std::size_t target_arity,
                                            Rng& rng) {
  if (w.empty()) {
    throw std::invalid_argument("word must be nonempty");
  }
  std::size_t const s = substitution_half_length(w.size(), target_arity);
  std::uint32_t const alphabet = static_cast<std::uint32_t>(2 * target_arity);
  for (int attempt = 0; attempt < kSubstitutionRetries; ++attempt) {
    std::vector<ReducedWord> omega;
    omega.reserve(w.arity());
    for (std::size_t i = 0; i < w.arity(); ++i) {
      ReducedWord const left = random_reduced_word(target_arity, s, rng);
      ReducedWord const right = random_reduced_word(target_arity, s, rng);
      // Middle letter must cancel neither neighbour.
      std::vector<std::uint32_t> allowed;
      for (std::uint32_t c = 0; c < alphabet; ++c) {
        if (!left.empty() && c == (left.letters().back().code() ^ 1U)) continue;
        if (!right.empty() && c == (right.letters().front().code() ^ 1U)) continue;
        allowed.push_back(c);
      }
      std::vector<Letter> letters = left.letters();
      letters.push_back(Letter::from_code(allowed[rng.below(allowed.size())]));
      letters.insert(letters.end(), right.begin(), right.end());
      omega.emplace_back(target_arity, std::move(letters));
    }
    if (!substitute(w, omega).empty()) {
      return omega;
    }
  }
  throw std::logic_error("build_substitution: retry cap reached");
}

////////////////////////////////////////////////////////////////////////////
// Text format
////////////////////////////////////////////////////////////////////////////

ReducedWord parse_word(std::string_view text, std::size_t arity) {
  if (arity > kMaxTextArity) {
    throw std::invalid_argument("text words support at most 26 generators");
  }
  std::vector<Letter> letters;
  letters.reserve(text.size());
  std::size_t used = 0;
  for (char ch : text) {
    Letter l;
    if (ch >= 'a' && ch <= 'z') {
      l = Letter{static_cast<std::uint32_t>(ch - 'a'), false};
    } else if (ch >= 'A' && ch <= 'Z') {
      l = Letter{static_cast<std::uint32_t>(ch - 'A'), true};
    } else {
      throw std::invalid_argument(std::string("invalid word character '") +
                                  ch + "'");
    }
    used = std::max<std::size_t>(used, l.generator + 1);
    letters.push_back(l);
  }
  if (arity == 0) {
    arity = used;
  } else if (used > arity) {
    throw std::invalid_argument("letter index beyond the word's arity");
  }
  return ReducedWord(arity, std::move(letters));
}

std::string format_word(ReducedWord const& w) {
  if (w.arity() > kMaxTextArity) {
    throw std::invalid_argument("text words support at most 26 generators");
  }
  std::string out;
  out.reserve(w.size());
  for (Letter const l : w) {
    out.push_back(static_cast<char>((l.inverse ? 'A' : 'a') + l.generator));
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// WordCode
////////////////////////////////////////////////////////////////////////////

unsigned WordCode::bits_per_letter(std::size_t arity) {
  if (arity == 0) {
    return 1;
  }
  return static_cast<unsigned>(std::bit_width(2 * arity - 1));
}

std::size_t WordCode::max_length(std::size_t arity) {
  return 63 / bits_per_letter(arity);
}

std::uint64_t WordCode::encode(ReducedWord const& w) {
  if (w.size() > max_length(w.arity())) {
    throw std::length_error("word too long for a 64-bit code");
  }
  unsigned const bits = bits_per_letter(w.arity());
  std::uint64_t code = empty();
  for (Letter const l : w) {
    code = append(code, l.code(), bits);
  }
  return code;
}

std::size_t WordCode::length(std::uint64_t code, std::size_t arity) {
  unsigned const bits = bits_per_letter(arity);
  return static_cast<std::size_t>(std::bit_width(code) - 1) / bits;
}

ReducedWord WordCode::decode(std::uint64_t code, std::size_t arity) {
  unsigned const bits = bits_per_letter(arity);
  std::size_t const n = length(code, arity);
  std::vector<Letter> letters(n);
  std::uint64_t const mask = (std::uint64_t{1} << bits) - 1;
  for (std::size_t i = n; i > 0; --i) {
    letters[i - 1] = Letter::from_code(static_cast<std::uint32_t>(code & mask));
    code >>= bits;
  }
  return ReducedWord(arity, std::move(letters));
}

}  // namespace cayley
