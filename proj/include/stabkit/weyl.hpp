#pragma once

// Weyl (generalized Pauli) operators w(p, q) = tau^{-p.q} z(p) x(q) on
// (C^d)^{tensor n}, with tau = exp(i pi (d^2 + 1) / d) and omega = tau^2.
//
// Exponents of tau are integer arithmetic on the 0..d-1 lifts of residues;
// they are only reduced modulo the order of tau (2d for even d, d for odd d).
// Operators are carried symbolically as (tau phase, canonical point) and
// realized as dense matrices on demand. Basis order of the dense realization
// is |q_1 ... q_n>, lexicographic with q_1 most significant.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stabkit/kernels.hpp"
#include "stabkit/symplectic.hpp"

namespace stabkit {

inline constexpr std::size_t kDefaultMatrixCap = 4096;

class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(std::size_t dim);
  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }
  std::span<const Complex> row(std::size_t r) const { return std::span(data_).subspan(r * dim_, dim_); }

  DenseOperator operator*(const DenseOperator& rhs) const;
  DenseOperator& operator+=(const DenseOperator& rhs);
  DenseOperator scaled(Complex factor) const;
  DenseOperator adjoint() const;
  Complex trace() const;
  std::vector<Complex> column(std::size_t col) const;
  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// Power of tau, exponent kept modulo the order of tau.
class TauPhase {
 public:
  explicit TauPhase(unsigned d, std::int64_t exponent = 0);

  unsigned d() const { return d_; }
  /// Order of tau: 2d for even d, d for odd d.
  unsigned modulus() const { return d_ % 2 == 0 ? 2 * d_ : d_; }
  std::uint32_t exponent() const { return exponent_; }
  Complex value() const;

  TauPhase operator*(const TauPhase& other) const;
  TauPhase inverse() const;

  friend bool operator==(const TauPhase&, const TauPhase&) = default;

 private:
  unsigned d_;
  std::uint32_t exponent_;
};

using IntVector = std::vector<std::int64_t>;

/// tau^phase * w(point) with `point` a canonical residue vector.
class WeylOperator {
 public:
  explicit WeylOperator(PhaseVector point);
  WeylOperator(TauPhase phase, PhaseVector point);
  static WeylOperator identity(unsigned d, std::size_t n);
  /// w evaluated at an integer vector (p, q), rewritten as tau^c w(r) with r
  /// the residue of the vector.
  static WeylOperator from_integer(unsigned d, const IntVector& lift);

  const TauPhase& phase() const { return phase_; }
  const PhaseVector& point() const { return point_; }

  /// Exact product: w(u) w(v) = tau^{[u,v]} w(u + v) with the integer sum.
  WeylOperator operator*(const WeylOperator& rhs) const;
  WeylOperator pow(unsigned k) const;

  DenseOperator matrix(std::size_t matrix_cap = kDefaultMatrixCap) const;
  /// target += coefficient * matrix(), touching only the d^n nonzeros.
  void accumulate_into(DenseOperator& target, Complex coefficient) const;

  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

 private:
  TauPhase phase_;
  PhaseVector point_;
};

namespace weyl {

/// d^n, or CapExceeded when it exceeds `matrix_cap`.
std::size_t hilbert_dim(unsigned d, std::size_t n, std::size_t matrix_cap = kDefaultMatrixCap);

Complex tau_power(unsigned d, std::int64_t exponent);
Complex omega_power(unsigned d, std::int64_t exponent);

/// x(q)|x> = |x + q>.
DenseOperator shift(unsigned d, std::span<const Residue> q, std::size_t matrix_cap = kDefaultMatrixCap);
/// z(p)|x> = omega^{p.x}|x>.
DenseOperator boost(unsigned d, std::span<const Residue> p, std::size_t matrix_cap = kDefaultMatrixCap);

DenseOperator weyl(const PhaseVector& v, std::size_t matrix_cap = kDefaultMatrixCap);
/// The defining formula evaluated directly at an integer vector.
DenseOperator weyl_integer(unsigned d, const IntVector& lift, std::size_t matrix_cap = kDefaultMatrixCap);

IntVector lift(const PhaseVector& v);
IntVector add(const IntVector& a, const IntVector& b);

/// w_B(m) = prod_i w(u_i)^{m_i}, m_i in 0..d-1 the coordinates of m in B.
/// Throws InvalidArgument when m is not in span(B).
WeylOperator weyl_basis_symbolic(std::span<const PhaseVector> basis, const PhaseVector& m);
DenseOperator weyl_basis(std::span<const PhaseVector> basis, const PhaseVector& m,
                         std::size_t matrix_cap = kDefaultMatrixCap);

/// max |w(u) w(v) - tau^{[u,v]} w(u + v)|, u + v taken in the integers.
double composition_residual(const PhaseVector& u, const PhaseVector& v,
                            std::size_t matrix_cap = kDefaultMatrixCap);
/// max |w(u) w(v) - omega^{[u,v]} w(v) w(u)|.
double commutation_residual(const PhaseVector& u, const PhaseVector& v,
                            std::size_t matrix_cap = kDefaultMatrixCap);

bool verify_composition(const PhaseVector& u, const PhaseVector& v, double tolerance = 1e-12,
                        std::size_t matrix_cap = kDefaultMatrixCap);
bool verify_commutation(const PhaseVector& u, const PhaseVector& v, double tolerance = 1e-12,
                        std::size_t matrix_cap = kDefaultMatrixCap);

}  // namespace weyl
}  // namespace stabkit
