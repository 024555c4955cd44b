// Seeded random source shared by every sampler in the library.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded integers are drawn by rejection instead of through
// std::uniform_int_distribution, whose algorithm is implementation-defined,
// so a given seed yields the same stream on every platform.

#ifndef CAYLEY_RNG_HPP_
#define CAYLEY_RNG_HPP_

#include <cstdint>
#include <random>

namespace cayley {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of trial `index` in a run started from `master`:
///   mix64(master ^ mix64(index)).
/// Depends only on (master, index), never on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t index) noexcept {
  return mix64(master ^ mix64(index));
}

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Largest multiple of bound that fits; draws at or above it are rejected.
    std::uint64_t const limit = (~std::uint64_t{0} / bound) * bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool bit() { return (engine_() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cayley

#endif  // CAYLEY_RNG_HPP_
