#include "cayley/girth.hpp"

namespace cayley {

namespace {

// Vertices within distance < r of a vertex (odd girth 2r + 1) or of an edge
// (even girth 2r) in a d-regular tree; saturates instead of overflowing.
std::uint64_t saturating_tree_count(std::size_t degree, std::size_t r,
                                    bool around_edge) {
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < r; ++i) {
    sum += power;
    if (sum >= kCap) return kCap;
    power = power > kCap / (degree - 1) ? kCap : power * (degree - 1);
  }
  if (around_edge) {
    return sum >= kCap / 2 ? kCap : 2 * sum;
  }
  return sum >= kCap / degree ? kCap : 1 + degree * sum;
}

}  // namespace

std::size_t moore_bound(std::size_t degree, std::uint64_t vertices) {
  if (degree < 3 || vertices < 2) {
    throw std::invalid_argument("moore_bound needs degree >= 3, n >= 2");
  }
  std::size_t best = 2;
  for (std::size_t g = 3; g < 256; ++g) {
    std::size_t const r = g / 2;
    bool const odd = (g % 2) == 1;
    if (saturating_tree_count(degree, r, !odd) <= vertices) {
      best = g;
    } else {
      break;
    }
  }
  return best;
}

}  // namespace cayley
