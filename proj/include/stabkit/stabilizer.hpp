#pragma once

// Stabilizer states |M, zeta>: a Lagrangian M together with a coset
// zeta + M. The pair is the state's identity; Hilbert-space vectors are
// realized on demand from the projector
//   rho = d^{-n} sum_{m in M} omega^{[zeta, m]} w_B(m),
// with B the canonical generators of M.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabkit/exact.hpp"
#include "stabkit/stream.hpp"
#include "stabkit/symplectic.hpp"
#include "stabkit/weyl.hpp"

namespace stabkit {

inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;

using StateVector = std::vector<Complex>;

class StabilizerState {
 public:
  StabilizerState() = default;
  /// zeta is replaced by its canonical coset representative.
  StabilizerState(LagrangianSubspace m, const PhaseVector& zeta);

  unsigned d() const { return m_.d(); }
  std::size_t n() const { return m_.n(); }
  const LagrangianSubspace& lagrangian() const { return m_; }
  const PhaseVector& zeta() const { return zeta_; }
  const std::vector<PhaseVector>& basis() const { return m_.generators(); }

  friend bool operator==(const StabilizerState& a, const StabilizerState& b) {
    return static_cast<const Subspace&>(a.m_) == static_cast<const Subspace&>(b.m_) && a.zeta_ == b.zeta_;
  }

 private:
  LagrangianSubspace m_;
  PhaseVector zeta_;
};

namespace stabilizer {

DenseOperator projector(const LagrangianSubspace& m, const PhaseVector& v,
                        std::size_t matrix_cap = kDefaultMatrixCap);

/// Unit vector spanning the projector's range. Global phase: the first
/// amplitude with modulus above 1e-8 is real and positive.
StateVector state_vector(const StabilizerState& s, std::size_t matrix_cap = kDefaultMatrixCap);

/// max over m in M of max_x |(omega^{[zeta,m]} w_B(m) psi - psi)_x|.
double eigen_residual(const StabilizerState& s, const StateVector& psi,
                      std::size_t matrix_cap = kDefaultMatrixCap);

/// |<a|b>|^2 as an exact rational: d^{dim K - n} when the two states agree
/// on every stabilizer w(g), g in K = M cap N, and 0 otherwise.
ExactRational overlap_exact(const StabilizerState& a, const StabilizerState& b);

/// Bases of M and N that both start with the canonical basis of K = M cap N.
std::pair<std::vector<PhaseVector>, std::vector<PhaseVector>> compatible_bases(const LagrangianSubspace& m,
                                                                               const LagrangianSubspace& n);

/// All S(d,n) states: Lagrangians in enumeration order, then their cosets in
/// lexicographic order of canonical representatives.
class StateEnumerator : public Stream<StateEnumerator, StabilizerState> {
 public:
  /// Throws CapExceeded when S(d,n) exceeds `cap`.
  StateEnumerator(unsigned d, std::size_t n, std::uint64_t cap = kDefaultStateCap);

  const ExactInteger& total() const { return total_; }
  std::optional<StabilizerState> next();

 private:
  ExactInteger total_;
  symplectic::LagrangianEnumerator lagrangians_;
  std::optional<LagrangianSubspace> current_;
  std::optional<symplectic::CosetEnumerator> cosets_;
};

StateEnumerator enumerate_states(unsigned d, std::size_t n, std::uint64_t cap = kDefaultStateCap);

}  // namespace stabilizer
}  // namespace stabkit

template <>
struct std::hash<stabkit::StabilizerState> {
  std::size_t operator()(const stabkit::StabilizerState& s) const noexcept;
};
