#include "cayley/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cayley {

using boost::multiprecision::cpp_int;

cpp_int power_solution_count_sn(std::size_t n, std::size_t l) {
  if (n < 1 || l < 1) {
    throw std::invalid_argument("need n >= 1 and l >= 1");
  }
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= l; ++d) {
    if (l % d == 0) {
      divisors.push_back(d);
    }
  }
  std::vector<cpp_int> c(n + 1);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    cpp_int total = 0;
    for (std::size_t d : divisors) {
      if (d > m) {
        break;
      }
      // (m-1)!/(m-d)! choices for the rest of the cycle through point m.
      cpp_int falling = 1;
      for (std::size_t j = 1; j < d; ++j) {
        falling *= m - j;
      }
      total += falling * c[m - d];
    }
    c[m] = total;
  }
  return c[n];
}

BigRational exact_power_word_prob_sn(std::size_t n, std::size_t l) {
  cpp_int factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    factorial *= i;
  }
  return BigRational(power_solution_count_sn(n, l), factorial);
}

double sn_word_prob_bound(std::size_t n, std::size_t length) {
  if (length < 1 || 2 * length >= n) {
    throw std::domain_error("sn_word_prob_bound requires 1 <= l and 2l < n");
  }
  double const x = 2.0 * static_cast<double>(length) / static_cast<double>(n);
  return std::pow(x, 1.0 / x);
}

double sn_power_word_lower_bound(std::size_t n, std::size_t l) {
  if (n < 1 || l < 1) {
    throw std::domain_error("need n >= 1 and l >= 1");
  }
  double const nd = static_cast<double>(n);
  return std::pow(1.0 / nd, nd / static_cast<double>(l));
}

double pgl_word_prob_bound(std::uint64_t p, std::size_t length) {
  if (length < 1) {
    throw std::domain_error("pgl_word_prob_bound requires length >= 1");
  }
  return static_cast<double>(length) / static_cast<double>(p);
}

double reduced_words_up_to(std::size_t degree, std::size_t length) {
  double total = 0.0;
  double level = static_cast<double>(degree);
  for (std::size_t i = 1; i <= length; ++i) {
    total += level;
    level *= static_cast<double>(degree) - 1.0;
  }
  return total;
}

std::size_t union_bound_threshold(std::size_t degree, UnionBoundKind kind,
                                  double parameter) {
  if (degree < 3) {
    throw std::invalid_argument("union_bound_threshold requires d >= 3");
  }
  double const base = std::log(static_cast<double>(degree) - 1.0);
  switch (kind) {
    case UnionBoundKind::kPglClosedForm: {
      double const x = std::log(parameter) / base;
      if (x <= 1.0) {
        return 0;
      }
      double const l = x - 2.0 * std::log(x) / base;
      return l <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(l));
    }
    case UnionBoundKind::kPglUnion: {
      std::size_t l = 0;
      while (reduced_words_up_to(degree, l + 1) *
                 pgl_word_prob_bound(static_cast<std::uint64_t>(parameter),
                                     l + 1) <
             1.0) {
        ++l;
      }
      return l;
    }
    case UnionBoundKind::kSymUnion: {
      auto const n = static_cast<std::size_t>(parameter);
      std::size_t l = 0;
      while (2 * (l + 1) < n &&
             reduced_words_up_to(degree, l + 1) * sn_word_prob_bound(n, l + 1) <
                 1.0) {
        ++l;
      }
      return l;
    }
  }
  throw std::invalid_argument("unknown bound kind");
}

}  // namespace cayley
