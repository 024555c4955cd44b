// Homogeneous polynomials over F_p and their zeros in projective space.

#ifndef CAYLEY_PROJECTIVE_HPP_
#define CAYLEY_PROJECTIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cayley/rng.hpp"

namespace cayley {

struct Monomial {
  std::uint32_t coefficient = 1;     // in [1, p)
  std::vector<unsigned> exponents;  // one per variable
};

class HomogeneousPoly {
 public:
  /// Validates: common total degree >= 1, coefficients in [1, p), one
  /// exponent per variable, p prime.
  HomogeneousPoly(std::size_t variables, std::uint32_t p,
                  std::vector<Monomial> monomials);

  std::size_t variables() const noexcept { return variables_; }
  std::uint32_t prime() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  std::vector<Monomial> const& monomials() const noexcept { return monomials_; }

  std::uint32_t evaluate(std::span<std::uint32_t const> point) const;

 private:
  std::size_t variables_;
  std::uint32_t p_;
  unsigned degree_ = 0;
  std::vector<Monomial> monomials_;
};

struct ProjectiveZeroCount {
  std::uint64_t zeros = 0;
  std::uint64_t points = 0;  // |P^{m-1}(F_p)|
  std::uint64_t bound = 0;   // d p^{m-2} + (p^{m-2} - 1)/(p - 1)
  bool within_bound = false;
};

/// d p^{m-2} + (p^{m-2} - 1)/(p - 1); requires m >= 2.
std::uint64_t projective_zero_bound(unsigned degree, std::size_t variables,
                                    std::uint32_t p);

/// Counts zeros over canonical representatives (first nonzero coordinate
/// 1). Requires p <= 13 and m <= 4.
ProjectiveZeroCount count_projective_zeros(HomogeneousPoly const& poly);

/// prod_i (x_0 - c_i x_1) in m variables.
HomogeneousPoly split_product_poly(std::span<std::uint32_t const> roots,
                                   std::size_t variables, std::uint32_t p);

/// Random nonzero form of the given degree: each monomial is kept with
/// probability 1/2 and given a uniform nonzero coefficient.
HomogeneousPoly random_homogeneous_poly(std::size_t variables, std::uint32_t p,
                                        unsigned degree, Rng& rng);

}  // namespace cayley

#endif  // CAYLEY_PROJECTIVE_HPP_
