#include "cayley/projective.hpp"

#include <numeric>
#include <stdexcept>

#include "cayley/groups.hpp"

namespace cayley {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

std::uint32_t powmod(std::uint32_t base, unsigned exp, std::uint32_t p) {
  std::uint64_t out = 1 % p;
  std::uint64_t b = base % p;
  while (exp > 0) {
    if (exp & 1U) out = out * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(out);
}

// All exponent vectors of total degree d in m variables, lexicographically.
void degree_vectors(std::size_t m, unsigned d, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == m) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur.push_back(e);
    degree_vectors(m, d - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HomogeneousPoly::HomogeneousPoly(std::size_t variables, std::uint32_t p,
                                 std::vector<Monomial> monomials)
    : variables_(variables), p_(p), monomials_(std::move(monomials)) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus must be prime");
  }
  if (monomials_.empty()) {
    throw std::invalid_argument("polynomial has no monomials");
  }
  bool first = true;
  for (Monomial const& mono : monomials_) {
    if (mono.exponents.size() != variables_) {
      throw std::invalid_argument("monomial has wrong number of exponents");
    }
    if (mono.coefficient == 0 || mono.coefficient >= p_) {
      throw std::invalid_argument("coefficient must lie in [1, p)");
    }
    unsigned const deg =
        std::accumulate(mono.exponents.begin(), mono.exponents.end(), 0U);
    if (first) {
      degree_ = deg;
      first = false;
    } else if (deg != degree_) {
      throw std::invalid_argument("monomials have inconsistent degrees");
    }
  }
  if (degree_ == 0) {
    throw std::invalid_argument("degree-0 polynomial");
  }
}

std::uint32_t HomogeneousPoly::evaluate(
    std::span<std::uint32_t const> point) const {
  std::uint64_t total = 0;
  for (Monomial const& mono : monomials_) {
    std::uint64_t term = mono.coefficient;
    for (std::size_t i = 0; i < variables_; ++i) {
      term = term * powmod(point[i], mono.exponents[i], p_) % p_;
    }
    total = (total + term) % p_;
  }
  return static_cast<std::uint32_t>(total);
}

std::uint64_t projective_zero_bound(unsigned degree, std::size_t variables,
                                    std::uint32_t p) {
  if (variables < 2) {
    throw std::invalid_argument("bound requires m >= 2");
  }
  std::uint64_t const q = ipow(p, variables - 2);
  return degree * q + (q - 1) / (p - 1);
}

ProjectiveZeroCount count_projective_zeros(HomogeneousPoly const& poly) {
  std::size_t const m = poly.variables();
  std::uint32_t const p = poly.prime();
  if (p > 13 || m > 4 || m < 2) {
    throw std::invalid_argument("enumeration limited to p <= 13, 2 <= m <= 4");
  }
  ProjectiveZeroCount out;
  std::vector<std::uint32_t> point(m, 0);
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::fill(point.begin(), point.end(), 0U);
    point[lead] = 1;
    std::uint64_t const free_points = ipow(p, m - 1 - lead);
    for (std::uint64_t idx = 0; idx < free_points; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t j = lead + 1; j < m; ++j) {
        point[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      ++out.points;
      if (poly.evaluate(point) == 0) ++out.zeros;
    }
  }
  out.bound = projective_zero_bound(poly.degree(), m, p);
  out.within_bound = out.zeros <= out.bound;
  return out;
}

HomogeneousPoly split_product_poly(std::span<std::uint32_t const> roots,
                                   std::size_t variables, std::uint32_t p) {
  if (variables < 2) {
    throw std::invalid_argument("need at least two variables");
  }
  // coeffs[j] multiplies x0^{d-j} x1^j.
  std::vector<std::uint64_t> coeffs{1};
  for (std::uint32_t c : roots) {
    std::uint64_t const neg_c = (p - c % p) % p;
    std::vector<std::uint64_t> next(coeffs.size() + 1, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j] = (next[j] + coeffs[j]) % p;
      next[j + 1] = (next[j + 1] + coeffs[j] * neg_c) % p;
    }
    coeffs.swap(next);
  }
  auto const d = static_cast<unsigned>(roots.size());
  std::vector<Monomial> monos;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    Monomial mono;
    mono.coefficient = static_cast<std::uint32_t>(coeffs[j]);
    mono.exponents.assign(variables, 0);
    mono.exponents[0] = d - static_cast<unsigned>(j);
    mono.exponents[1] = static_cast<unsigned>(j);
    monos.push_back(std::move(mono));
  }
  return HomogeneousPoly(variables, p, std::move(monos));
}

HomogeneousPoly random_homogeneous_poly(std::size_t variables, std::uint32_t p,
                                        unsigned degree, Rng& rng) {
  std::vector<std::vector<unsigned>> exps;
  std::vector<unsigned> cur;
  degree_vectors(variables, degree, cur, exps);
  std::vector<Monomial> monos;
  while (monos.empty()) {
    for (auto const& e : exps) {
      if (rng.bit()) {
        monos.push_back(Monomial{
            static_cast<std::uint32_t>(1 + rng.below(p - 1)), e});
      }
    }
  }
  return HomogeneousPoly(variables, p, std::move(monos));
}

}  // namespace cayley
