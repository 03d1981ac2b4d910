#pragma once

// Frame potentials of the full stabilizer ensemble, three ways: the closed
// recursion over n, the intersection-counting sum, and direct summation over
// realized state vectors. Exact engines return rationals; numeric ones return
// doubles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stabkit/exact.hpp"
#include "stabkit/stabilizer.hpp"

namespace stabkit {

inline constexpr std::uint64_t kDefaultBruteforceCap = 5'000;
inline constexpr std::uint64_t kDefaultSingleSumCap = 1'000'000;

struct PotentialOptions {
  std::uint64_t bruteforce_cap = kDefaultBruteforceCap;
  std::uint64_t single_sum_cap = kDefaultSingleSumCap;
  std::size_t matrix_cap = kDefaultMatrixCap;
  unsigned threads = 1;
  /// Fill `bruteforce` / `fixed_state` in design_verdict when within caps.
  bool with_bruteforce = false;
  bool with_fixed_state = false;
};

struct FramePotentialReport {
  unsigned d = 2;
  unsigned n = 1;
  unsigned t = 1;
  ExactInteger dimension;  // D = d^n
  ExactRational recursion;
  ExactRational combinatorial;
  std::optional<double> bruteforce;
  std::optional<double> fixed_state;
  ExactRational welch;
  bool is_design = false;

  friend bool operator==(const FramePotentialReport&, const FramePotentialReport&) = default;
};

namespace potential {

ExactRational frame_potential_recursion(unsigned d, unsigned n, unsigned t);
ExactRational frame_potential_combinatorial(unsigned d, unsigned n, unsigned t);

/// Realized state vectors of every stabilizer state, in enumeration order.
/// Throws CapExceeded when S(d,n) exceeds `cap`.
std::vector<StateVector> realize_states(unsigned d, unsigned n, std::uint64_t cap,
                                        std::size_t matrix_cap = kDefaultMatrixCap, unsigned threads = 1);

/// S^{-2} sum_{i,j} |<x_i, x_j>|^{2t}; rows are summed by a pairwise tree and
/// the row sums by another, so the result is independent of `threads`.
double bruteforce_from_vectors(std::span<const StateVector> states, unsigned t, unsigned threads = 1);
/// S^{-1} sum_i |<x_0, x_i>|^{2t}.
double fixed_state_from_vectors(std::span<const StateVector> states, unsigned t);

/// Throws CapExceeded above options.bruteforce_cap states.
double frame_potential_bruteforce(unsigned d, unsigned n, unsigned t, const PotentialOptions& options = {});
/// Throws CapExceeded above options.single_sum_cap states.
double frame_potential_fixed_state(unsigned d, unsigned n, unsigned t, const PotentialOptions& options = {});

/// The t-th factor of the recursion at n -> n+1 for a given n:
/// (d^{n-(t-2)} + 1) / (d (d^{n+1} + 1)).
ExactRational recursion_factor(unsigned d, unsigned n, unsigned t);

/// Reports for t = 1..t_max. Numeric engines are included per `options` and
/// left empty when S(d,n) exceeds their cap.
std::vector<FramePotentialReport> design_verdict(unsigned d, unsigned n, unsigned t_max,
                                                 const PotentialOptions& options = {});

FramePotentialReport report(unsigned d, unsigned n, unsigned t);

}  // namespace potential
}  // namespace stabkit
