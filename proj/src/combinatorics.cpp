#include "stabkit/combinatorics.hpp"

#include <string>

#include "stabkit/errors.hpp"

namespace stabkit::combinatorics {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t f = 2; f * f <= value; ++f) {
    if (value % f == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t d) {
  if (!is_prime(d)) throw InvalidArgument("d must be prime (got " + std::to_string(d) + ")");
}

ExactInteger binomial(const ExactInteger& n, std::uint64_t k) {
  if (n < 0) throw InvalidArgument("binomial: negative n");
  if (ExactInteger(k) > n) return 0;
  ExactInteger result = 1;
  // After step i the accumulator is C(n, i+1), so every division is exact.
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

ExactInteger binomial(std::uint64_t n, std::uint64_t k) { return binomial(ExactInteger(n), k); }

ExactInteger gaussian_binomial(unsigned n, unsigned k, unsigned d) {
  require_prime(d);
  if (k > n) return 0;
  const ExactInteger q = d;
  ExactInteger result = 1;
  // Partial product after step i is binom(n, i+1)_d, an integer.
  for (unsigned i = 0; i < k; ++i) {
    result *= ipow(q, n - i) - 1;
    result /= ipow(q, i + 1) - 1;
  }
  return result;
}

bool gaussian_pascal_check(unsigned n, unsigned k, unsigned d) {
  if (n == 0) throw InvalidArgument("gaussian_pascal_check: n must be >= 1");
  const ExactInteger lhs = gaussian_binomial(n, k, d);
  ExactInteger rhs = ipow(ExactInteger(d), k) * gaussian_binomial(n - 1, k, d);
  if (k >= 1) rhs += gaussian_binomial(n - 1, k - 1, d);
  return lhs == rhs;
}

ExactInteger lagrangian_count(unsigned d, unsigned n) {
  require_prime(d);
  ExactInteger result = 1;
  for (unsigned j = 1; j <= n; ++j) result *= ipow(ExactInteger(d), j) + 1;
  return result;
}

ExactInteger stabilizer_count(unsigned d, unsigned n) {
  require_prime(d);
  if (n == 0) throw InvalidArgument("stabilizer_count: n must be >= 1");
  return ipow(ExactInteger(d), n) * lagrangian_count(d, n);
}

ExactInteger transversal_count(unsigned d, unsigned n) {
  return ipow(ExactInteger(d), std::uint64_t{n} * (n + 1) / 2);
}

ExactInteger kappa(unsigned d, unsigned n, unsigned k) {
  if (k > n) {
    throw InvalidArgument("kappa: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  return gaussian_binomial(n, k, d) * transversal_count(d, n - k);
}

ExactRational welch_bound(const ExactInteger& dimension, unsigned t) {
  if (dimension < 1) throw InvalidArgument("welch_bound: dimension must be positive");
  if (t < 1) throw InvalidArgument("welch_bound: t must be positive");
  return ExactRational(ExactInteger(1), binomial(dimension + t - 1, t));
}

}  // namespace stabkit::combinatorics
