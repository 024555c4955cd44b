// Small statistics helpers shared by the test binaries.

#ifndef CAYLEY_TESTS_SUPPORT_HPP_
#define CAYLEY_TESTS_SUPPORT_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace cayley::testing {

// Upper-tail p-value of Pearson's statistic against equal expected counts.
inline double chi_square_uniform_pvalue(std::vector<std::size_t> const& counts) {
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  double const expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) {
    double const diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

inline double binomial_sigma(double n, double p) {
  return std::sqrt(n * p * (1.0 - p));
}

}  // namespace cayley::testing

#endif  // CAYLEY_TESTS_SUPPORT_HPP_
