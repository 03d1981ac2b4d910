#include "stabkit/finite_field.hpp"

#include <string>
#include <utility>

#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"

namespace stabkit {

PrimeField::PrimeField(unsigned d) : d_(d) {
  combinatorics::require_prime(d);
  if (d >= (1U << 15)) throw InvalidArgument("d too large for residue arithmetic");
  inverses_.assign(d, 0);
  for (Residue a = 1; a < d; ++a) {
    for (Residue b = 1; b < d; ++b) {
      if (a * b % d == 1) {
        inverses_[a] = b;
        break;
      }
    }
  }
}

Residue PrimeField::inv(Residue a) const {
  if (a % d_ == 0) throw InvalidArgument("inverse of zero in Z_" + std::to_string(d_));
  return inverses_[a % d_];
}

Residue PrimeField::reduce(std::int64_t value) const {
  const auto m = static_cast<std::int64_t>(d_);
  return static_cast<Residue>(((value % m) + m) % m);
}

void PrimeField::axpy(Residue factor, std::span<const Residue> source, std::span<Residue> target) const {
  if (factor == 0) return;
  for (std::size_t i = 0; i < target.size(); ++i) target[i] = (target[i] + factor * source[i]) % d_;
}

void PrimeField::scale(Residue factor, std::span<Residue> row) const {
  for (auto& x : row) x = (x * factor) % d_;
}

Residue PrimeField::dot(std::span<const Residue> a, std::span<const Residue> b) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t{a[i]} * b[i];
  return static_cast<Residue>(acc % d_);
}

std::vector<std::size_t> rref(const PrimeField& field, std::vector<Row>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    field.scale(field.inv(rows[lead][col]), rows[lead]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead && rows[r][col] != 0) field.axpy(field.neg(rows[r][col]), rows[lead], rows[r]);
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

std::size_t rank(const PrimeField& field, std::vector<Row> rows) { return rref(field, rows).size(); }

std::vector<Row> nullspace(const PrimeField& field, std::vector<Row> rows, std::size_t cols) {
  const auto pivots = rref(field, rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field.neg(rows[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Row> solve_combination(const PrimeField& field, const std::vector<Row>& basis,
                                     const Row& target) {
  // Column-augmented system: unknown c_i multiplies basis[i]; one equation per
  // coordinate of the target.
  const std::size_t k = basis.size();
  const std::size_t m = target.size();
  std::vector<Row> system(m, Row(k + 1, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < k; ++i) system[j][i] = basis[i][j];
    system[j][k] = target[j];
  }
  const auto pivots = rref(field, system);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
  if (pivots.size() != k) throw InvalidArgument("solve_combination: basis is dependent");
  Row coeffs(k, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = system[r][k];
  return coeffs;
}

std::optional<std::vector<Row>> inverse(const PrimeField& field, const std::vector<Row>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return std::vector<Row>{};
  std::vector<Row> aug(n, Row(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = matrix[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(field, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<Row> inv(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

}  // namespace stabkit
