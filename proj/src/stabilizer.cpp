#include "stabkit/stabilizer.hpp"

#include <cmath>
#include <string>

#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"

namespace stabkit {

StabilizerState::StabilizerState(LagrangianSubspace m, const PhaseVector& zeta) : m_(std::move(m)) {
  if (zeta.d() != m_.d() || zeta.size() != m_.ambient_dim()) {
    throw DimensionMismatch("stabilizer state: zeta outside the phase space of M");
  }
  zeta_ = m_.reduce(zeta);
}

namespace stabilizer {

namespace {

WeylOperator basis_power_product(const std::vector<PhaseVector>& basis, const Row& coefficients, unsigned d,
                                 std::size_t n) {
  WeylOperator out = WeylOperator::identity(d, n);
  for (std::size_t i = 0; i < basis.size(); ++i) out = out * WeylOperator(basis[i]).pow(coefficients[i]);
  return out;
}

/// tau exponent of w_B(g) relative to w(g).
std::int64_t basis_phase(const std::vector<PhaseVector>& basis, const PhaseVector& g) {
  return weyl::weyl_basis_symbolic(basis, g).phase().exponent();
}

void require_same_space(const StabilizerState& a, const StabilizerState& b) {
  if (a.d() != b.d() || a.n() != b.n()) throw DimensionMismatch("stabilizer states from different spaces");
}

}  // namespace

DenseOperator projector(const LagrangianSubspace& m, const PhaseVector& v, std::size_t matrix_cap) {
  const unsigned d = m.d();
  const std::size_t n = m.n();
  DenseOperator rho(weyl::hilbert_dim(d, n, matrix_cap));
  const double norm = 1.0 / static_cast<double>(rho.dim());
  const auto& basis = m.generators();
  m.for_each_element([&](const Row& coefficients, const PhaseVector& element) {
    const Complex coefficient = norm * weyl::omega_power(d, symplectic::form(v, element));
    basis_power_product(basis, coefficients, d, n).accumulate_into(rho, coefficient);
  });
  return rho;
}

StateVector state_vector(const StabilizerState& s, std::size_t matrix_cap) {
  const DenseOperator rho = projector(s.lagrangian(), s.zeta(), matrix_cap);
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t c = 0; c < rho.dim(); ++c) {
    const double nrm = kernels::norm(rho.column(c));
    if (nrm > best_norm) {
      best_norm = nrm;
      best = c;
    }
  }
  StateVector psi = rho.column(best);
  Complex phase = 1.0 / best_norm;
  for (const auto& a : psi) {
    if (std::abs(a) > 1e-8) {
      phase = std::conj(a) / (std::abs(a) * best_norm);
      break;
    }
  }
  for (auto& a : psi) a *= phase;
  return psi;
}

double eigen_residual(const StabilizerState& s, const StateVector& psi, std::size_t matrix_cap) {
  const auto& m = s.lagrangian();
  double worst = 0.0;
  m.for_each_element([&](const Row& coefficients, const PhaseVector& element) {
    DenseOperator op(weyl::hilbert_dim(s.d(), s.n(), matrix_cap));
    basis_power_product(s.basis(), coefficients, s.d(), s.n())
        .accumulate_into(op, weyl::omega_power(s.d(), symplectic::form(s.zeta(), element)));
    worst = std::max(worst, kernels::max_abs_diff(op.apply(psi), psi));
  });
  return worst;
}

ExactRational overlap_exact(const StabilizerState& a, const StabilizerState& b) {
  require_same_space(a, b);
  const Subspace k = symplectic::intersect(a.lagrangian(), b.lagrangian());
  const unsigned d = a.d();
  const std::int64_t period = d % 2 == 0 ? 2 * std::int64_t{d} : d;
  // |a> is an eigenvector of w(g) with eigenvalue tau^{-(2[zeta,g] + phase_B(g))}.
  for (const auto& g : k.generators()) {
    const std::int64_t ea = 2 * std::int64_t{symplectic::form(a.zeta(), g)} + basis_phase(a.basis(), g);
    const std::int64_t eb = 2 * std::int64_t{symplectic::form(b.zeta(), g)} + basis_phase(b.basis(), g);
    if ((ea - eb) % period != 0) return ExactRational(0);
  }
  return rpow(ExactInteger(d), static_cast<std::int64_t>(k.dim()) - static_cast<std::int64_t>(a.n()));
}

std::pair<std::vector<PhaseVector>, std::vector<PhaseVector>> compatible_bases(const LagrangianSubspace& m,
                                                                               const LagrangianSubspace& n) {
  const Subspace k = symplectic::intersect(m, n);
  auto extend = [&](const Subspace& target) {
    std::vector<PhaseVector> basis = k.generators();
    Subspace spanned = k;
    for (const auto& g : target.generators()) {
      if (spanned.contains(g)) continue;
      basis.push_back(g);
      spanned = Subspace::span(target.d(), target.ambient_dim(), basis);
    }
    return basis;
  };
  return {extend(m), extend(n)};
}

namespace {

ExactInteger checked_state_total(unsigned d, std::size_t n, std::uint64_t cap) {
  ExactInteger total = combinatorics::stabilizer_count(d, static_cast<unsigned>(n));
  if (total > cap) {
    throw CapExceeded("S(" + std::to_string(d) + "," + std::to_string(n) + ") = " + total.str() +
                      " states exceeds the state cap " + std::to_string(cap));
  }
  return total;
}

}  // namespace

StateEnumerator::StateEnumerator(unsigned d, std::size_t n, std::uint64_t cap)
    : total_(checked_state_total(d, n, cap)), lagrangians_(d, n) {}

std::optional<StabilizerState> StateEnumerator::next() {
  while (true) {
    if (cosets_) {
      if (auto zeta = cosets_->next()) return StabilizerState(*current_, *zeta);
    }
    current_ = lagrangians_.next();
    if (!current_) return std::nullopt;
    cosets_.emplace(*current_);
  }
}

StateEnumerator enumerate_states(unsigned d, std::size_t n, std::uint64_t cap) { return StateEnumerator(d, n, cap); }

}  // namespace stabilizer
}  // namespace stabkit

std::size_t std::hash<stabkit::StabilizerState>::operator()(const stabkit::StabilizerState& s) const noexcept {
  return std::hash<stabkit::Subspace>{}(s.lagrangian()) * 31U ^ std::hash<stabkit::PhaseVector>{}(s.zeta());
}
