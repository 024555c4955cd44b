// Key -> WordCode store used by the girth search.
//
// 64-bit keys go into a flat open-addressing table (linear probing, 16 bytes
// per slot, all-ones key marks an empty slot). Other key types fall back to
// std::unordered_map. Both report their footprint so the search can enforce
// a byte budget before allocating.

#ifndef CAYLEY_COLLISION_MAP_HPP_
#define CAYLEY_COLLISION_MAP_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/rng.hpp"

namespace cayley {

template <class Key>
class CollisionMap {
 public:
  static std::size_t estimate_bytes(std::size_t entries,
                                    std::size_t key_bytes) {
    // Node, bucket pointer and heap-held key payload.
    return entries * (64 + key_bytes);
  }

  void reset(std::size_t expected_entries) {
    map_.clear();
    map_.reserve(expected_entries);
  }

  /// Inserts key -> code unless present; returns the stored code otherwise.
  std::optional<std::uint64_t> insert(Key const& key, std::uint64_t code) {
    auto [it, inserted] = map_.try_emplace(key, code);
    if (inserted) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::unordered_map<Key, std::uint64_t> map_;
};

template <>
class CollisionMap<std::uint64_t> {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  static constexpr double kMaxLoad = 0.8;

  static std::size_t capacity_for(std::size_t entries) {
    auto const need =
        static_cast<std::size_t>(static_cast<double>(entries) / kMaxLoad) + 1;
    return std::bit_ceil(std::max<std::size_t>(need, 16));
  }

  static std::size_t estimate_bytes(std::size_t entries, std::size_t) {
    return capacity_for(entries) * sizeof(Slot);
  }

  void reset(std::size_t expected_entries) {
    std::size_t const capacity = capacity_for(expected_entries);
    if (slots_.size() != capacity) {
      slots_.assign(capacity, Slot{kEmpty, 0});
      slots_.shrink_to_fit();
    } else {
      std::fill(slots_.begin(), slots_.end(), Slot{kEmpty, 0});
    }
    mask_ = capacity - 1;
    size_ = 0;
    limit_ = static_cast<std::size_t>(static_cast<double>(capacity) * kMaxLoad);
  }

  std::optional<std::uint64_t> insert(std::uint64_t key, std::uint64_t code) {
    if (size_ >= limit_) {
      grow();
    }
    std::size_t i = mix64(key) & mask_;
    while (true) {
      Slot& s = slots_[i];
      if (s.key == kEmpty) {
        s.key = key;
        s.code = code;
        ++size_;
        return std::nullopt;
      }
      if (s.key == key) {
        return s.code;
      }
      i = (i + 1) & mask_;
    }
  }

  std::size_t size() const noexcept { return size_; }

 private:
  struct Slot {
    std::uint64_t key;
    std::uint64_t code;
  };

  void grow() {
    std::vector<Slot> old;
    old.swap(slots_);
    reset(old.size());
    for (Slot const& s : old) {
      if (s.key != kEmpty) {
        insert(s.key, s.code);
      }
    }
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
  std::size_t limit_ = 0;
};

}  // namespace cayley

#endif  // CAYLEY_COLLISION_MAP_HPP_
