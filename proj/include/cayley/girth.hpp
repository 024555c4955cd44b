// Girth of the Cayley graph of <g_1, ..., g_k> with respect to
// S = {g_i^{+-1}}: the length of the shortest nontrivial relation.
//
// girth() walks the tree of reduced words depth by depth. While no two
// words of length <= d share an element the ball of radius d is a tree, so
// words and elements are in bijection. A relation of length g splits as
// u v^{-1} with |u| = ceil(g/2), |v| = floor(g/2), so the first depth d* at
// which two words collide is ceil(g/2); every collision at that depth gives a
// relation of length <= 2 d*, and the minimum over them is g. Any collision
// at depth d involves words of lengths d and d - 1 or d and d, so the
// collision map only ever holds two levels. The reported witness is the
// least word over rotations and inverses of the shortest collision
// relations.
//
// girth_oracle() enumerates cyclically reduced words without hashing and is
// kept as an independent check.

#ifndef CAYLEY_GIRTH_HPP_
#define CAYLEY_GIRTH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cayley/collision_map.hpp"
#include "cayley/words.hpp"

namespace cayley {

struct GirthLimits {
  std::size_t max_girth = 30;
  std::size_t memory_limit = 600'000'000;  // bytes
};

/// The collision map would exceed its byte budget.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string const& what, std::size_t depth_reached)
      : std::runtime_error(what), depth_reached_(depth_reached) {}
  std::size_t depth_reached() const noexcept { return depth_reached_; }

 private:
  std::size_t depth_reached_;
};

struct GirthResult {
  enum class Kind { kExact, kAtLeast };

  Kind kind = Kind::kAtLeast;
  /// The girth when exact, otherwise a certified lower bound.
  std::size_t length = 0;
  ReducedWord witness;
  std::size_t stored = 0;  // collision-map entries at the last depth
  std::size_t depth = 0;   // deepest word length explored

  bool exact() const noexcept { return kind == Kind::kExact; }
};

/// Largest g such that a d-regular graph on n vertices can have girth g.
std::size_t moore_bound(std::size_t degree, std::uint64_t vertices);

namespace detail {

template <class Key>
std::size_t key_bytes(Key const& key) {
  if constexpr (std::is_same_v<Key, std::uint64_t>) {
    return sizeof(std::uint64_t);
  } else {
    return key.size();
  }
}

template <class Group>
class GirthSearch {
 public:
  using Element = typename Group::Element;
  using Key = typename Group::Key;

  GirthSearch(Group const& group, std::span<Element const> gens,
              GirthLimits limits)
      : group_(group),
        arity_(gens.size()),
        limits_(limits),
        bits_(WordCode::bits_per_letter(gens.size())) {
    if (gens.empty()) {
      throw std::invalid_argument("girth needs at least one generator");
    }
    if (limits.max_girth < 1) {
      throw std::invalid_argument("max_girth must be >= 1");
    }
    letters_.reserve(2 * gens.size());
    for (Element const& g : gens) {
      letters_.push_back(g);
      letters_.push_back(group.invert(g));
    }
  }

  GirthResult run() {
    std::size_t const max_depth = (limits_.max_girth + 1) / 2;
    if (max_depth > WordCode::max_length(arity_)) {
      throw std::invalid_argument("max_girth too large for 64-bit word codes");
    }
    std::size_t const key_size = key_bytes(group_.packed_key(group_.identity()));
    path_.assign(max_depth + 1, group_.identity());

    GirthResult result;
    for (target_ = 1; target_ <= max_depth; ++target_) {
      std::size_t const expected = reduced_word_count(arity_, target_ - 1) +
                                   reduced_word_count(arity_, target_);
      if (CollisionMap<Key>::estimate_bytes(expected, key_size) >
          limits_.memory_limit) {
        throw ResourceLimitError(
            "girth search exceeds memory limit at depth " +
                std::to_string(target_),
            target_ - 1);
      }
      map_.reset(expected);
      collisions_.clear();
      descend(0, 0, WordCode::empty());
      result.stored = map_.size();
      result.depth = target_;
      if (!collisions_.empty()) {
        pick_witness(result);
        if (result.length > limits_.max_girth) {
          // Only possible at the last depth when max_girth is odd.
          result.kind = GirthResult::Kind::kAtLeast;
          result.length = limits_.max_girth + 1;
          result.witness = ReducedWord();
        }
        return result;
      }
    }
    result.kind = GirthResult::Kind::kAtLeast;
    result.length = limits_.max_girth + 1;
    return result;
  }

 private:
  void descend(std::size_t depth, std::uint32_t last, std::uint64_t code) {
    if (depth + 1 >= target_) {
      if (auto stored = map_.insert(group_.packed_key(path_[depth]), code)) {
        collisions_.emplace_back(code, *stored);
      }
      if (depth == target_) {
        return;
      }
    }
    auto const alphabet = static_cast<std::uint32_t>(letters_.size());
    for (std::uint32_t c = 0; c < alphabet; ++c) {
      if (depth > 0 && c == (last ^ 1U)) {
        continue;
      }
      group_.multiply_into(path_[depth], letters_[c], path_[depth + 1]);
      descend(depth + 1, c, WordCode::append(code, c, bits_));
    }
  }

  void pick_witness(GirthResult& result) const {
    bool have = false;
    for (auto const& [u_code, v_code] : collisions_) {
      ReducedWord const u = WordCode::decode(u_code, arity_);
      ReducedWord const v = WordCode::decode(v_code, arity_);
      ReducedWord rel = cyclic_reduce(concat_inverse_reduce(u, v));
      if (!rel.empty()) rel = least_cyclic_form(rel);
      if (rel.empty()) {
        throw std::logic_error("collision produced a trivial relation");
      }
      if (!have || rel.size() < result.witness.size() ||
          (rel.size() == result.witness.size() &&
           lex_less(rel, result.witness))) {
        result.witness = std::move(rel);
        have = true;
      }
    }
    result.kind = GirthResult::Kind::kExact;
    result.length = result.witness.size();
  }

  Group const& group_;
  std::size_t arity_;
  GirthLimits limits_;
  unsigned bits_;
  std::vector<Element> letters_;  // indexed by letter code
  std::vector<Element> path_;
  CollisionMap<Key> map_;
  std::size_t target_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> collisions_;
};

}  // namespace detail

template <class Group>
GirthResult girth(Group const& group,
                  std::span<typename Group::Element const> gens,
                  GirthLimits limits = {}) {
  return detail::GirthSearch<Group>(group, gens, limits).run();
}

template <class Group>
GirthResult girth(Group const& group,
                  std::vector<typename Group::Element> const& gens,
                  GirthLimits limits = {}) {
  return girth(group,
               std::span<typename Group::Element const>(gens.data(), gens.size()),
               limits);
}

/// Exhaustive search over cyclically reduced words of length 1..max_girth.
/// Exponential; for tests on small instances.
template <class Group>
GirthResult girth_oracle(Group const& group,
                         std::vector<typename Group::Element> const& gens,
                         std::size_t max_girth) {
  auto const e = group.identity();
  GirthResult result;
  for (std::size_t length = 1; length <= max_girth; ++length) {
    for (ReducedWordEnumerator it(gens.size(), length); !it.done();
         it.advance()) {
      ReducedWord const& w = it.current();
      if (!w.is_cyclically_reduced()) {
        continue;
      }
      if (evaluate(group, w, gens) == e) {
        result.kind = GirthResult::Kind::kExact;
        result.length = length;
        result.witness = w;
        result.depth = length;
        return result;
      }
    }
  }
  result.kind = GirthResult::Kind::kAtLeast;
  result.length = max_girth + 1;
  result.depth = max_girth;
  return result;
}

/// min_i ord(g_i): the relation g_i^{ord(g_i)} bounds the girth from above.
template <class Group>
std::uint64_t power_upper_bound(Group const& group,
                                std::vector<typename Group::Element> const& gens) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (auto const& g : gens) {
    best = std::min(best, group.order(g));
  }
  return best;
}

/// Checks an exact result: cyclically reduced, right length, trivial value.
template <class Group>
bool witness_is_valid(Group const& group,
                      std::vector<typename Group::Element> const& gens,
                      GirthResult const& result) {
  if (!result.exact()) {
    return true;
  }
  ReducedWord const& w = result.witness;
  return !w.empty() && w.arity() == gens.size() && w.is_cyclically_reduced() &&
         w.size() == result.length &&
         evaluate(group, w, gens) == group.identity();
}

}  // namespace cayley

#endif  // CAYLEY_GIRTH_HPP_
