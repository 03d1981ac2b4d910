#pragma once

// Closed-form counting over finite symplectic spaces. Everything here is
// exact; there is deliberately no floating-point path.

#include <cstdint>

#include "stabkit/exact.hpp"

namespace stabkit::combinatorics {

bool is_prime(std::uint64_t value);

/// Throws InvalidArgument("d must be prime") unless d is prime.
void require_prime(std::uint64_t d);

ExactInteger binomial(const ExactInteger& n, std::uint64_t k);
ExactInteger binomial(std::uint64_t n, std::uint64_t k);

/// Number of k-dimensional subspaces of Z_d^n.
ExactInteger gaussian_binomial(unsigned n, unsigned k, unsigned d);

/// binom(n,k)_d == d^k binom(n-1,k)_d + binom(n-1,k-1)_d, evaluated exactly.
/// Requires n >= 1.
bool gaussian_pascal_check(unsigned n, unsigned k, unsigned d);

/// Number of Lagrangian subspaces of Z_d^{2n}: prod_{j=1..n} (d^j + 1).
ExactInteger lagrangian_count(unsigned d, unsigned n);

/// S(d,n) = d^n prod_{j=1..n} (d^j + 1).
ExactInteger stabilizer_count(unsigned d, unsigned n);

/// Lagrangians transverse to a fixed one: d^{n(n+1)/2}.
ExactInteger transversal_count(unsigned d, unsigned n);

/// Lagrangians meeting a fixed Lagrangian in exactly k dimensions.
ExactInteger kappa(unsigned d, unsigned n, unsigned k);

/// 1 / C(D + t - 1, t).
ExactRational welch_bound(const ExactInteger& dimension, unsigned t);

}  // namespace stabkit::combinatorics
