#pragma once

// Dense linear algebra over the prime field Z_d. Rows are plain residue
// vectors; every ring operation reduces mod d immediately.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stabkit {

using Residue = std::uint32_t;
using Row = std::vector<Residue>;

class PrimeField {
 public:
  /// Throws InvalidArgument unless d is a prime below 2^15.
  explicit PrimeField(unsigned d);

  unsigned modulus() const { return d_; }

  Residue add(Residue a, Residue b) const { return (a + b) % d_; }
  Residue sub(Residue a, Residue b) const { return (a + d_ - b) % d_; }
  Residue neg(Residue a) const { return (d_ - a) % d_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % d_; }
  Residue inv(Residue a) const;  // a != 0
  Residue reduce(std::int64_t value) const;

  /// target += factor * source, elementwise.
  void axpy(Residue factor, std::span<const Residue> source, std::span<Residue> target) const;
  void scale(Residue factor, std::span<Residue> row) const;
  Residue dot(std::span<const Residue> a, std::span<const Residue> b) const;

 private:
  unsigned d_;
  std::vector<Residue> inverses_;
};

/// Gauss-Jordan to reduced row echelon form. Zero rows are dropped, pivots are
/// normalized to 1 and cleared above and below. Returns the pivot columns.
std::vector<std::size_t> rref(const PrimeField& field, std::vector<Row>& rows);

std::size_t rank(const PrimeField& field, std::vector<Row> rows);

/// Basis of {x : r . x = 0 for every r in rows}, with `cols` unknowns.
std::vector<Row> nullspace(const PrimeField& field, std::vector<Row> rows, std::size_t cols);

/// Coefficients c with sum_i c_i basis[i] == target, or nullopt when target is
/// outside the span. `basis` must be linearly independent.
std::optional<Row> solve_combination(const PrimeField& field, const std::vector<Row>& basis,
                                     const Row& target);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<std::vector<Row>> inverse(const PrimeField& field, const std::vector<Row>& matrix);

}  // namespace stabkit
