#include "cayley/laws.hpp"

#include <algorithm>

namespace cayley {

using boost::multiprecision::cpp_int;

namespace {

Poly poly_mul(Poly const& x, Poly const& y) {
  if (x.empty() || y.empty()) return {};
  Poly out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

Poly poly_add(Poly x, Poly const& y) {
  if (x.size() < y.size()) x.resize(y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
  return x;
}

PolyMatrix mat_mul(PolyMatrix const& x, PolyMatrix const& y) {
  return PolyMatrix{
      poly_add(poly_mul(x[0], y[0]), poly_mul(x[1], y[2])),
      poly_add(poly_mul(x[0], y[1]), poly_mul(x[1], y[3])),
      poly_add(poly_mul(x[2], y[0]), poly_mul(x[3], y[2])),
      poly_add(poly_mul(x[2], y[1]), poly_mul(x[3], y[3])),
  };
}

}  // namespace

long poly_degree(Poly const& p) {
  for (std::size_t i = p.size(); i > 0; --i) {
    if (p[i - 1] != 0) return static_cast<long>(i - 1);
  }
  return -1;
}

PolyMatrix ping_pong_product(
    std::vector<std::pair<long, long>> const& exponents) {
  PolyMatrix acc{Poly{1}, Poly{0}, Poly{0}, Poly{1}};
  for (auto const& [l, k] : exponents) {
    PolyMatrix const lower{Poly{1}, Poly{0}, Poly{0, cpp_int(l)}, Poly{1}};
    PolyMatrix const upper{Poly{1}, Poly{0, cpp_int(k)}, Poly{0}, Poly{1}};
    acc = mat_mul(mat_mul(acc, lower), upper);
  }
  return acc;
}

bool verify_ping_pong_form(
    std::vector<std::pair<long, long>> const& exponents) {
  cpp_int lead = 1;
  for (auto const& [l, k] : exponents) {
    if (l == 0 || k == 0) {
      throw std::invalid_argument("ping-pong exponents must be nonzero");
    }
    lead *= cpp_int(l) * k;
  }
  auto const r = static_cast<long>(exponents.size());
  PolyMatrix const m = ping_pong_product(exponents);
  if (poly_degree(m[3]) != 2 * r ||
      m[3][static_cast<std::size_t>(2 * r)] != lead) {
    return false;
  }
  for (int i = 0; i < 3; ++i) {
    if (poly_degree(m[i]) > 2 * r - 1) return false;
  }
  return true;
}

}  // namespace cayley
