#include "stabkit/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

std::int64_t mod(std::int64_t value, std::int64_t m) { return ((value % m) + m) % m; }

/// i^k, exactly.
Complex quarter_turn(std::int64_t k) {
  static constexpr Complex kTurns[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return kTurns[mod(k, 4)];
}

std::vector<Complex> tau_table(unsigned d) {
  std::vector<Complex> table(2 * d);
  for (unsigned e = 0; e < 2 * d; ++e) table[e] = weyl::tau_power(d, e);
  return table;
}

/// target(y, x) += coefficient * tau^{base + 2 z.y} for y = x + shift_by,
/// i.e. tau^base z(z_exp) x(shift_by).
void realize(unsigned d, std::size_t n, std::int64_t base, std::span<const Residue> z_exp,
             std::span<const Residue> shift_by, DenseOperator& target, Complex coefficient) {
  const auto table = tau_table(d);
  const std::int64_t period = 2 * static_cast<std::int64_t>(d);
  const std::size_t dim = target.dim();
  std::vector<Residue> digits(n, 0);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t row = 0;
    std::int64_t exponent = base;
    for (std::size_t i = 0; i < n; ++i) {
      const Residue y = (digits[i] + shift_by[i]) % d;
      row = row * d + y;
      exponent += 2 * std::int64_t{z_exp[i]} * y;
    }
    target(row, x) += coefficient * table[mod(exponent, period)];
    for (std::size_t i = n; i > 0; --i) {
      if (++digits[i - 1] < d) break;
      digits[i - 1] = 0;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DenseOperator

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("operator product: dimension mismatch");
  DenseOperator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    auto out_row = std::span(out.data_).subspan(i * dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex(0.0, 0.0)) continue;
      kernels::axpy(a, rhs.row(k), out_row);
    }
  }
  return out;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatch("operator sum: dimension mismatch");
  kernels::axpy(1.0, rhs.data_, data_);
  return *this;
}

DenseOperator DenseOperator::scaled(Complex factor) const {
  DenseOperator out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex DenseOperator::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

std::vector<Complex> DenseOperator::column(std::size_t col) const {
  std::vector<Complex> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, col);
  return out;
}

std::vector<Complex> DenseOperator::apply(std::span<const Complex> v) const {
  if (v.size() != dim_) throw DimensionMismatch("apply: vector length mismatch");
  std::vector<Complex> out(dim_, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) acc += (*this)(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
  return kernels::max_abs_diff(a.data(), b.data());
}

// ---------------------------------------------------------------------------
// TauPhase / WeylOperator

TauPhase::TauPhase(unsigned d, std::int64_t exponent)
    : d_(d), exponent_(static_cast<std::uint32_t>(mod(exponent, d % 2 == 0 ? 2 * d : d))) {}

Complex TauPhase::value() const { return weyl::tau_power(d_, exponent_); }

TauPhase TauPhase::operator*(const TauPhase& other) const {
  if (d_ != other.d_) throw DimensionMismatch("tau phases for different d");
  return TauPhase(d_, std::int64_t{exponent_} + other.exponent_);
}

TauPhase TauPhase::inverse() const { return TauPhase(d_, -std::int64_t{exponent_}); }

WeylOperator::WeylOperator(PhaseVector point) : phase_(point.d(), 0), point_(std::move(point)) {}

WeylOperator::WeylOperator(TauPhase phase, PhaseVector point) : phase_(phase), point_(std::move(point)) {
  if (phase_.d() != point_.d()) throw DimensionMismatch("phase and point for different d");
}

WeylOperator WeylOperator::identity(unsigned d, std::size_t n) { return WeylOperator(PhaseVector::zero(d, 2 * n)); }

WeylOperator WeylOperator::from_integer(unsigned d, const IntVector& lift) {
  if (lift.size() % 2 != 0) throw DimensionMismatch("from_integer: odd-length vector");
  const std::size_t n = lift.size() / 2;
  Row residues(lift.size());
  for (std::size_t i = 0; i < lift.size(); ++i) residues[i] = static_cast<Residue>(mod(lift[i], d));
  // tau^{-P.Q} z(P) x(Q) = tau^{-P.Q + p.q} w(p, q) where (p, q) = (P, Q) mod d.
  std::int64_t exponent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    exponent += -lift[i] * lift[n + i] + std::int64_t{residues[i]} * residues[n + i];
  }
  return WeylOperator(TauPhase(d, exponent), PhaseVector(d, std::move(residues)));
}

WeylOperator WeylOperator::operator*(const WeylOperator& rhs) const {
  const auto lifted = weyl::add(weyl::lift(point_), weyl::lift(rhs.point_));
  const WeylOperator sum = from_integer(point_.d(), lifted);
  const TauPhase commutator(point_.d(), symplectic::integer_form(point_, rhs.point_));
  return WeylOperator(phase_ * rhs.phase_ * commutator * sum.phase_, sum.point_);
}

WeylOperator WeylOperator::pow(unsigned k) const {
  WeylOperator out = identity(point_.d(), point_.n());
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

DenseOperator WeylOperator::matrix(std::size_t matrix_cap) const {
  DenseOperator out(weyl::hilbert_dim(point_.d(), point_.n(), matrix_cap));
  accumulate_into(out, 1.0);
  return out;
}

void WeylOperator::accumulate_into(DenseOperator& target, Complex coefficient) const {
  const std::size_t n = point_.n();
  std::int64_t base = phase_.exponent();
  for (std::size_t i = 0; i < n; ++i) base -= std::int64_t{point_.p()[i]} * point_.q()[i];
  realize(point_.d(), n, base, point_.p(), point_.q(), target, coefficient);
}

namespace weyl {

std::size_t hilbert_dim(unsigned d, std::size_t n, std::size_t matrix_cap) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim > matrix_cap / d) {
      throw CapExceeded("Hilbert dimension " + std::to_string(d) + "^" + std::to_string(n) +
                        " exceeds matrix cap " + std::to_string(matrix_cap));
    }
    dim *= d;
  }
  if (dim > matrix_cap) {
    throw CapExceeded("Hilbert dimension " + std::to_string(dim) + " exceeds matrix cap " +
                      std::to_string(matrix_cap));
  }
  return dim;
}

Complex tau_power(unsigned d, std::int64_t exponent) {
  // tau^e = exp(i pi (d^2 + 1) e / d); reduce the numerator modulo 2d first.
  const std::int64_t dd = d;
  const std::int64_t r = mod((dd * dd + 1) % (2 * dd) * mod(exponent, 2 * dd), 2 * dd);
  if ((2 * r) % dd == 0) return quarter_turn(2 * r / dd);
  const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

Complex omega_power(unsigned d, std::int64_t exponent) {
  const std::int64_t r = mod(exponent, d);
  if ((4 * r) % d == 0) return quarter_turn(4 * r / d);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

DenseOperator shift(unsigned d, std::span<const Residue> q, std::size_t matrix_cap) {
  const std::size_t dim = hilbert_dim(d, q.size(), matrix_cap);
  DenseOperator out(dim);
  std::vector<Residue> digits(q.size(), 0);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < q.size(); ++i) row = row * d + (digits[i] + q[i]) % d;
    out(row, x) = 1.0;
    for (std::size_t i = q.size(); i > 0; --i) {
      if (++digits[i - 1] < d) break;
      digits[i - 1] = 0;
    }
  }
  return out;
}

DenseOperator boost(unsigned d, std::span<const Residue> p, std::size_t matrix_cap) {
  const std::size_t dim = hilbert_dim(d, p.size(), matrix_cap);
  DenseOperator out(dim);
  std::vector<Residue> digits(p.size(), 0);
  for (std::size_t x = 0; x < dim; ++x) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < p.size(); ++i) e += std::int64_t{p[i]} * digits[i];
    out(x, x) = omega_power(d, e);
    for (std::size_t i = p.size(); i > 0; --i) {
      if (++digits[i - 1] < d) break;
      digits[i - 1] = 0;
    }
  }
  return out;
}

DenseOperator weyl(const PhaseVector& v, std::size_t matrix_cap) { return WeylOperator(v).matrix(matrix_cap); }

DenseOperator weyl_integer(unsigned d, const IntVector& lift, std::size_t matrix_cap) {
  if (lift.size() % 2 != 0) throw DimensionMismatch("weyl_integer: odd-length vector");
  const std::size_t n = lift.size() / 2;
  DenseOperator out(hilbert_dim(d, n, matrix_cap));
  Row z_exp(n), shift_by(n);
  std::int64_t base = 0;
  for (std::size_t i = 0; i < n; ++i) {
    base -= lift[i] * lift[n + i];
    z_exp[i] = static_cast<Residue>(mod(lift[i], d));
    shift_by[i] = static_cast<Residue>(mod(lift[n + i], d));
  }
  realize(d, n, base, z_exp, shift_by, out, 1.0);
  return out;
}

IntVector lift(const PhaseVector& v) { return IntVector(v.coords().begin(), v.coords().end()); }

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

WeylOperator weyl_basis_symbolic(std::span<const PhaseVector> basis, const PhaseVector& m) {
  const PrimeField field(m.d());
  std::vector<Row> rows;
  for (const auto& b : basis) {
    if (b.d() != m.d() || b.size() != m.size()) throw DimensionMismatch("weyl_basis: basis outside the space of m");
    rows.push_back(b.coords());
  }
  const auto coeffs = solve_combination(field, rows, m.coords());
  if (!coeffs) throw InvalidArgument("weyl_basis: m is not in the span of the basis");
  WeylOperator out = WeylOperator::identity(m.d(), m.n());
  for (std::size_t i = 0; i < basis.size(); ++i) out = out * WeylOperator(basis[i]).pow((*coeffs)[i]);
  return out;
}

DenseOperator weyl_basis(std::span<const PhaseVector> basis, const PhaseVector& m, std::size_t matrix_cap) {
  return weyl_basis_symbolic(basis, m).matrix(matrix_cap);
}

double composition_residual(const PhaseVector& u, const PhaseVector& v, std::size_t matrix_cap) {
  const DenseOperator lhs = weyl(u, matrix_cap) * weyl(v, matrix_cap);
  const DenseOperator rhs = weyl_integer(u.d(), add(lift(u), lift(v)), matrix_cap)
                                .scaled(tau_power(u.d(), symplectic::integer_form(u, v)));
  return max_abs_diff(lhs, rhs);
}

double commutation_residual(const PhaseVector& u, const PhaseVector& v, std::size_t matrix_cap) {
  const DenseOperator wu = weyl(u, matrix_cap);
  const DenseOperator wv = weyl(v, matrix_cap);
  const DenseOperator rhs = (wv * wu).scaled(omega_power(u.d(), symplectic::form(u, v)));
  return max_abs_diff(wu * wv, rhs);
}

bool verify_composition(const PhaseVector& u, const PhaseVector& v, double tolerance, std::size_t matrix_cap) {
  return composition_residual(u, v, matrix_cap) <= tolerance;
}

bool verify_commutation(const PhaseVector& u, const PhaseVector& v, double tolerance, std::size_t matrix_cap) {
  return commutation_residual(u, v, matrix_cap) <= tolerance;
}

}  // namespace weyl
}  // namespace stabkit
