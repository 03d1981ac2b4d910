#pragma once

// Linear algebra over the phase space Z_d^{2n} with the standard symplectic
// form [u, v] = u_p . v_q - u_q . v_p. Coordinates are ordered
// (p_1..p_n, q_1..q_n).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "stabkit/exact.hpp"
#include "stabkit/finite_field.hpp"
#include "stabkit/stream.hpp"

namespace stabkit {

/// A vector over Z_d. Phase-space points have even length 2n; the same type
/// carries plain vectors of Z_d^m when a subspace lives in configuration space.
class PhaseVector {
 public:
  PhaseVector() = default;
  PhaseVector(unsigned d, Row coords);
  static PhaseVector zero(unsigned d, std::size_t size);
  /// Phase-space point (p, q).
  static PhaseVector from_pq(unsigned d, std::span<const Residue> p, std::span<const Residue> q);

  unsigned d() const { return d_; }
  std::size_t size() const { return coords_.size(); }
  std::size_t n() const { return coords_.size() / 2; }
  const Row& coords() const { return coords_; }
  Residue operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Residue> p() const { return std::span(coords_).first(n()); }
  std::span<const Residue> q() const { return std::span(coords_).subspan(n()); }
  bool is_zero() const;

  PhaseVector operator+(const PhaseVector& other) const;
  PhaseVector operator-(const PhaseVector& other) const;
  PhaseVector operator-() const;
  PhaseVector scaled(Residue factor) const;

  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
  friend auto operator<=>(const PhaseVector&, const PhaseVector&) = default;

 private:
  unsigned d_ = 2;
  Row coords_;
};

/// A linear subspace in canonical reduced row echelon form: pivots equal 1,
/// pivot columns are zero in every other row, rows are sorted by pivot. The
/// canonical form is unique, so structural equality is subspace equality.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace.
  Subspace(unsigned d, std::size_t ambient_dim);
  /// Span of arbitrary rows (Gauss-Jordan; dependent rows are discarded).
  static Subspace span(unsigned d, std::size_t ambient_dim, std::span<const PhaseVector> rows);
  static Subspace full(unsigned d, std::size_t ambient_dim);

  unsigned d() const { return d_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t n() const { return ambient_ / 2; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<PhaseVector>& generators() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const PhaseVector& v) const;
  bool contains(const Subspace& other) const;
  /// v minus its components on the pivot columns: zero on every pivot. This
  /// is the canonical representative of the coset v + S.
  PhaseVector reduce(const PhaseVector& v) const;
  /// Expansion coefficients of v in the canonical generators (v must lie in
  /// the subspace); for RREF these are v's pivot coordinates.
  Row coordinates(const PhaseVector& v) const;
  PhaseVector element(std::span<const Residue> coefficients) const;

  /// Visits all d^dim elements, coefficient vectors in lexicographic order.
  void for_each_element(const std::function<void(const Row&, const PhaseVector&)>& visit) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  unsigned d_ = 2;
  std::size_t ambient_ = 0;
  std::vector<PhaseVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A Subspace checked to be Lagrangian (isotropic, dim = n).
class LagrangianSubspace : public Subspace {
 public:
  LagrangianSubspace() = default;
  /// Throws InvalidArgument if `s` is not Lagrangian.
  explicit LagrangianSubspace(Subspace s);
};

namespace symplectic {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// [u, v] mod d.
Residue form(const PhaseVector& u, const PhaseVector& v);
/// u_p . v_q - u_q . v_p computed in the integers from the 0..d-1 lifts.
std::int64_t integer_form(const PhaseVector& u, const PhaseVector& v);

Subspace canonicalize(unsigned d, std::size_t ambient_dim, std::span<const PhaseVector> rows);

bool is_isotropic(const Subspace& s);
bool is_lagrangian(const Subspace& s);

/// Symplectic complement S^perp.
Subspace complement(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool is_transverse(const LagrangianSubspace& a, const LagrangianSubspace& b);

/// Every k-dimensional subspace of Z_d^m exactly once, ordered by pivot-column
/// pattern (lexicographic) and then by free entries (odometer, last entry
/// fastest).
class SubspaceEnumerator : public Stream<SubspaceEnumerator, Subspace> {
 public:
  /// Throws CapExceeded when the Gaussian binomial exceeds `cap`.
  SubspaceEnumerator(unsigned d, std::size_t ambient_dim, std::size_t k,
                     std::uint64_t cap = kDefaultEnumerationCap);

  const ExactInteger& total() const { return total_; }
  std::optional<Subspace> next();

 private:
  bool next_pattern();
  void load_pattern();

  unsigned d_;
  std::size_t ambient_;
  std::size_t k_;
  ExactInteger total_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots_;  // (row, column)
  Row free_values_;
};

SubspaceEnumerator enumerate_subspaces(unsigned d, std::size_t ambient_dim, std::size_t k,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// k-dimensional subspaces of a given subspace S.
std::vector<Subspace> subspaces_of(const Subspace& s, std::size_t k,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// All Lagrangians of Z_d^{2n}: n-dimensional subspaces filtered by isotropy.
class LagrangianEnumerator : public Stream<LagrangianEnumerator, LagrangianSubspace> {
 public:
  LagrangianEnumerator(unsigned d, std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
  std::optional<LagrangianSubspace> next();

 private:
  SubspaceEnumerator inner_;
};

LagrangianEnumerator enumerate_lagrangians(unsigned d, std::size_t n,
                                           std::uint64_t cap = kDefaultEnumerationCap);

/// Empirical kappa: dim(M cap N) -> number of Lagrangians N, over all N.
std::map<std::size_t, std::uint64_t> intersection_spectrum(const LagrangianSubspace& m,
                                                           std::uint64_t cap = kDefaultEnumerationCap);

/// The quotient W / (W cap W^perp) with its induced form.
struct ReducedSpace {
  Subspace radical;                          // W cap W^perp
  std::vector<PhaseVector> representatives;  // basis of W modulo the radical
  std::vector<Row> gram;                     // [r_i, r_j]

  std::size_t dim() const { return representatives.size(); }
  bool is_nondegenerate() const;
};

ReducedSpace symplectic_reduce(const Subspace& w);

/// Lagrangians N with M cap N == K, generated from a symplectic frame of
/// K^perp / K: N_A = K + span{f_i + sum_j A_ij e_j} for symmetric A.
class ExtensionEnumerator : public Stream<ExtensionEnumerator, LagrangianSubspace> {
 public:
  /// Throws InvalidArgument unless K is a subspace of M.
  ExtensionEnumerator(const LagrangianSubspace& m, const Subspace& k,
                      std::uint64_t cap = kDefaultEnumerationCap);

  const ExactInteger& total() const { return total_; }
  std::optional<LagrangianSubspace> next();

 private:
  Subspace k_;
  std::vector<PhaseVector> e_;  // basis of M modulo K
  std::vector<PhaseVector> f_;  // isotropic dual partners, [e_i, f_j] = delta_ij
  ExactInteger total_;
  Row entries_;                 // upper triangle of A, row-major
  bool done_ = false;
};

ExtensionEnumerator extensions_through(const LagrangianSubspace& m, const Subspace& k,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// Canonical coset representatives of V / M: the d^n vectors vanishing on M's
/// pivot columns, in lexicographic order of the remaining coordinates.
class CosetEnumerator : public Stream<CosetEnumerator, PhaseVector> {
 public:
  explicit CosetEnumerator(const Subspace& m);
  std::optional<PhaseVector> next();

 private:
  unsigned d_;
  std::size_t ambient_;
  std::vector<std::size_t> free_columns_;
  Row values_;
  bool done_ = false;
};

CosetEnumerator coset_representatives(const LagrangianSubspace& m);

/// Result of testing N against a reference Lagrangian M. When N is
/// transverse to M, `adjacency` is the symmetric matrix A with
/// N = span{f_i + sum_j A_ij e_j}, where e is M's canonical basis and f its
/// isotropic dual partners (the unit vectors on M's non-pivot columns, made
/// dual and isotropic).
struct GraphForm {
  bool is_graph = false;
  std::vector<Row> adjacency;
};

GraphForm is_graph_lagrangian(const LagrangianSubspace& n, const LagrangianSubspace& m);

}  // namespace symplectic
}  // namespace stabkit

template <>
struct std::hash<stabkit::PhaseVector> {
  std::size_t operator()(const stabkit::PhaseVector& v) const noexcept;
};

template <>
struct std::hash<stabkit::Subspace> {
  std::size_t operator()(const stabkit::Subspace& s) const noexcept;
};
