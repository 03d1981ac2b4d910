#include "stabkit/symplectic.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

void require_same_space(const PhaseVector& u, const PhaseVector& v) {
  if (u.d() != v.d() || u.size() != v.size()) {
    throw DimensionMismatch("phase vectors from different spaces");
  }
}

void require_same_space(const Subspace& a, const Subspace& b) {
  if (a.d() != b.d() || a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces of different ambient spaces");
  }
}

void require_even(const Subspace& s) {
  if (s.ambient_dim() % 2 != 0) throw DimensionMismatch("symplectic operation on odd-dimensional space");
}

std::vector<Row> rows_of(std::span<const PhaseVector> vectors) {
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(v.coords());
  return rows;
}

std::vector<PhaseVector> vectors_of(unsigned d, std::vector<Row> rows) {
  std::vector<PhaseVector> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(d, std::move(r));
  return out;
}

/// Extends `base` (independent) greedily by candidates that are not yet in
/// the span; returns only the added vectors.
std::vector<PhaseVector> greedy_extension(const PrimeField& field, std::vector<PhaseVector> base,
                                          const std::vector<PhaseVector>& candidates) {
  std::vector<PhaseVector> added;
  auto rows = rows_of(base);
  std::size_t r = rank(field, rows);
  for (const auto& c : candidates) {
    rows.push_back(c.coords());
    const std::size_t next = rank(field, rows);
    if (next > r) {
      r = next;
      added.push_back(c);
    } else {
      rows.pop_back();
    }
  }
  return added;
}

/// Symplectic frame adapted to K inside M: e spans M modulo K, f is isotropic,
/// orthogonal to K and dual to e. When K is zero the f's are built from the
/// unit vectors on M's non-pivot columns.
struct DualFrame {
  std::vector<PhaseVector> e;
  std::vector<PhaseVector> f;
};

DualFrame dual_frame(const Subspace& m, const Subspace& k) {
  const PrimeField field(m.d());
  DualFrame frame;
  frame.e = greedy_extension(field, k.generators(), m.generators());
  const std::size_t count = frame.e.size();

  std::vector<PhaseVector> candidates;
  if (k.dim() == 0) {
    std::vector<bool> pivot(m.ambient_dim(), false);
    for (auto p : m.pivots()) pivot[p] = true;
    for (std::size_t j = 0; j < m.ambient_dim(); ++j) {
      if (pivot[j]) continue;
      Row unit(m.ambient_dim(), 0);
      unit[j] = 1;
      candidates.emplace_back(m.d(), std::move(unit));
    }
  } else {
    candidates = symplectic::complement(k).generators();
  }
  const auto c = greedy_extension(field, m.generators(), candidates);
  if (c.size() != count) throw InvalidArgument("dual_frame: complement has wrong dimension");

  // Pairing P_ij = [e_i, c_j] is invertible; f_j = sum_l c_l (P^-1)_lj.
  std::vector<Row> pairing(count, Row(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) pairing[i][j] = symplectic::form(frame.e[i], c[j]);
  }
  const auto inv = inverse(field, pairing);
  if (!inv) throw InvalidArgument("dual_frame: degenerate pairing");
  std::vector<PhaseVector> f;
  for (std::size_t j = 0; j < count; ++j) {
    PhaseVector v = PhaseVector::zero(m.d(), m.ambient_dim());
    for (std::size_t l = 0; l < count; ++l) v = v + c[l].scaled((*inv)[l][j]);
    f.push_back(std::move(v));
  }
  // f'_i = f_i - sum_{j>i} [f_i, f_j] e_j makes the f's mutually isotropic
  // without disturbing [e_i, f_j] = delta_ij.
  for (std::size_t i = 0; i < count; ++i) {
    PhaseVector v = f[i];
    for (std::size_t j = i + 1; j < count; ++j) {
      v = v - frame.e[j].scaled(symplectic::form(f[i], f[j]));
    }
    frame.f.push_back(std::move(v));
  }
  return frame;
}

}  // namespace

// ---------------------------------------------------------------------------
// PhaseVector

PhaseVector::PhaseVector(unsigned d, Row coords) : d_(d), coords_(std::move(coords)) {
  for (auto x : coords_) {
    if (x >= d_) throw InvalidArgument("coordinate " + std::to_string(x) + " out of range for Z_" + std::to_string(d));
  }
}

PhaseVector PhaseVector::zero(unsigned d, std::size_t size) { return PhaseVector(d, Row(size, 0)); }

PhaseVector PhaseVector::from_pq(unsigned d, std::span<const Residue> p, std::span<const Residue> q) {
  if (p.size() != q.size()) throw DimensionMismatch("p and q parts differ in length");
  Row coords(p.begin(), p.end());
  coords.insert(coords.end(), q.begin(), q.end());
  return PhaseVector(d, std::move(coords));
}

bool PhaseVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Residue x) { return x == 0; });
}

PhaseVector PhaseVector::operator+(const PhaseVector& other) const {
  require_same_space(*this, other);
  PhaseVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = (coords_[i] + other.coords_[i]) % d_;
  return out;
}

PhaseVector PhaseVector::operator-(const PhaseVector& other) const {
  require_same_space(*this, other);
  PhaseVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = (coords_[i] + d_ - other.coords_[i]) % d_;
  }
  return out;
}

PhaseVector PhaseVector::operator-() const { return scaled(d_ - 1); }

PhaseVector PhaseVector::scaled(Residue factor) const {
  PhaseVector out = *this;
  for (auto& x : out.coords_) x = (x * (factor % d_)) % d_;
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(unsigned d, std::size_t ambient_dim) : d_(d), ambient_(ambient_dim) {}

Subspace Subspace::span(unsigned d, std::size_t ambient_dim, std::span<const PhaseVector> rows) {
  const PrimeField field(d);
  for (const auto& r : rows) {
    if (r.d() != d || r.size() != ambient_dim) throw DimensionMismatch("span: row outside the ambient space");
  }
  auto matrix = rows_of(rows);
  Subspace s(d, ambient_dim);
  s.pivots_ = rref(field, matrix);
  s.rows_ = vectors_of(d, std::move(matrix));
  return s;
}

Subspace Subspace::full(unsigned d, std::size_t ambient_dim) {
  std::vector<PhaseVector> units;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    Row r(ambient_dim, 0);
    r[j] = 1;
    units.emplace_back(d, std::move(r));
  }
  return span(d, ambient_dim, units);
}

PhaseVector Subspace::reduce(const PhaseVector& v) const {
  if (v.d() != d_ || v.size() != ambient_) throw DimensionMismatch("reduce: vector outside the ambient space");
  Row out = v.coords();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Residue c = out[pivots_[i]];
    if (c == 0) continue;
    const Residue neg = (d_ - c) % d_;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] = (out[j] + neg * rows_[i][j]) % d_;
  }
  return PhaseVector(d_, std::move(out));
}

bool Subspace::contains(const PhaseVector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_space(*this, other);
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const PhaseVector& r) { return contains(r); });
}

Row Subspace::coordinates(const PhaseVector& v) const {
  if (!contains(v)) throw InvalidArgument("coordinates: vector not in subspace");
  Row c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

PhaseVector Subspace::element(std::span<const Residue> coefficients) const {
  if (coefficients.size() != rows_.size()) throw DimensionMismatch("element: wrong coefficient count");
  Row out(ambient_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Residue c = coefficients[i] % d_;
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] = (out[j] + c * rows_[i][j]) % d_;
  }
  return PhaseVector(d_, std::move(out));
}

void Subspace::for_each_element(const std::function<void(const Row&, const PhaseVector&)>& visit) const {
  Row coeffs(rows_.size(), 0);
  while (true) {
    visit(coeffs, element(coeffs));
    std::size_t i = coeffs.size();
    while (i > 0) {
      --i;
      if (++coeffs[i] < d_) break;
      coeffs[i] = 0;
      if (i == 0) return;
    }
    if (coeffs.empty()) return;
  }
}

LagrangianSubspace::LagrangianSubspace(Subspace s) : Subspace(std::move(s)) {
  if (!symplectic::is_lagrangian(*this)) throw InvalidArgument("subspace is not Lagrangian");
}

namespace symplectic {

Residue form(const PhaseVector& u, const PhaseVector& v) {
  require_same_space(u, v);
  return PrimeField(u.d()).reduce(integer_form(u, v));
}

std::int64_t integer_form(const PhaseVector& u, const PhaseVector& v) {
  require_same_space(u, v);
  if (u.size() % 2 != 0) throw DimensionMismatch("symplectic form on odd-dimensional vectors");
  std::int64_t acc = 0;
  const std::size_t n = u.n();
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::int64_t{u[i]} * v[n + i] - std::int64_t{u[n + i]} * v[i];
  }
  return acc;
}

Subspace canonicalize(unsigned d, std::size_t ambient_dim, std::span<const PhaseVector> rows) {
  return Subspace::span(d, ambient_dim, rows);
}

bool is_isotropic(const Subspace& s) {
  require_even(s);
  const auto& g = s.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (form(g[i], g[j]) != 0) return false;
    }
  }
  return true;
}

bool is_lagrangian(const Subspace& s) {
  return s.ambient_dim() % 2 == 0 && s.dim() == s.n() && is_isotropic(s);
}

Subspace complement(const Subspace& s) {
  require_even(s);
  const PrimeField field(s.d());
  const std::size_t n = s.n();
  // [v, s] = v_p . s_q - v_q . s_p, i.e. the functional (s_q, -s_p).
  std::vector<Row> functionals;
  for (const auto& g : s.generators()) {
    Row c(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = g[n + i];
      c[n + i] = field.neg(g[i]);
    }
    functionals.push_back(std::move(c));
  }
  auto basis = vectors_of(s.d(), nullspace(field, std::move(functionals), 2 * n));
  return Subspace::span(s.d(), s.ambient_dim(), basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  const PrimeField field(a.d());
  // A cap B = ann(ann(A) + ann(B)) for the dot-product annihilator.
  auto ann = nullspace(field, rows_of(a.generators()), a.ambient_dim());
  auto ann_b = nullspace(field, rows_of(b.generators()), b.ambient_dim());
  ann.insert(ann.end(), ann_b.begin(), ann_b.end());
  auto basis = vectors_of(a.d(), nullspace(field, std::move(ann), a.ambient_dim()));
  return Subspace::span(a.d(), a.ambient_dim(), basis);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_space(a, b);
  std::vector<PhaseVector> rows = a.generators();
  rows.insert(rows.end(), b.generators().begin(), b.generators().end());
  return Subspace::span(a.d(), a.ambient_dim(), rows);
}

bool is_transverse(const LagrangianSubspace& a, const LagrangianSubspace& b) {
  return intersect(a, b).dim() == 0;
}

// ---------------------------------------------------------------------------
// Enumeration

SubspaceEnumerator::SubspaceEnumerator(unsigned d, std::size_t ambient_dim, std::size_t k, std::uint64_t cap)
    : d_(d), ambient_(ambient_dim), k_(k) {
  total_ = combinatorics::gaussian_binomial(static_cast<unsigned>(ambient_dim), static_cast<unsigned>(k), d);
  if (total_ > cap) {
    throw CapExceeded("enumeration of " + total_.str() + " subspaces exceeds cap " + std::to_string(cap));
  }
  if (k > ambient_dim) done_ = true;
}

void SubspaceEnumerator::load_pattern() {
  free_slots_.clear();
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t r = 0; r < k_; ++r) {
    for (std::size_t c = pivots_[r] + 1; c < ambient_; ++c) {
      if (!is_pivot[c]) free_slots_.emplace_back(r, c);
    }
  }
  free_values_.assign(free_slots_.size(), 0);
}

bool SubspaceEnumerator::next_pattern() {
  // Next k-combination of {0..ambient-1} in lexicographic order.
  std::size_t i = k_;
  while (i > 0) {
    --i;
    if (pivots_[i] < ambient_ - k_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<Subspace> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    pivots_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
    load_pattern();
  } else {
    std::size_t i = free_values_.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++free_values_[i] < d_) {
        advanced = true;
        break;
      }
      free_values_[i] = 0;
    }
    if (!advanced) {
      if (!next_pattern()) {
        done_ = true;
        return std::nullopt;
      }
      load_pattern();
    }
  }
  std::vector<PhaseVector> rows;
  rows.reserve(k_);
  std::vector<Row> raw(k_, Row(ambient_, 0));
  for (std::size_t r = 0; r < k_; ++r) raw[r][pivots_[r]] = 1;
  for (std::size_t s = 0; s < free_slots_.size(); ++s) {
    raw[free_slots_[s].first][free_slots_[s].second] = free_values_[s];
  }
  for (auto& r : raw) rows.emplace_back(d_, std::move(r));
  return Subspace::span(d_, ambient_, rows);
}

SubspaceEnumerator enumerate_subspaces(unsigned d, std::size_t ambient_dim, std::size_t k, std::uint64_t cap) {
  return SubspaceEnumerator(d, ambient_dim, k, cap);
}

std::vector<Subspace> subspaces_of(const Subspace& s, std::size_t k, std::uint64_t cap) {
  std::vector<Subspace> out;
  for (const auto& coeff_space : enumerate_subspaces(s.d(), s.dim(), k, cap)) {
    std::vector<PhaseVector> rows;
    for (const auto& g : coeff_space.generators()) rows.push_back(s.element(g.coords()));
    out.push_back(Subspace::span(s.d(), s.ambient_dim(), rows));
  }
  return out;
}

LagrangianEnumerator::LagrangianEnumerator(unsigned d, std::size_t n, std::uint64_t cap)
    : inner_(d, 2 * n, n, cap) {}

std::optional<LagrangianSubspace> LagrangianEnumerator::next() {
  while (auto s = inner_.next()) {
    if (is_isotropic(*s)) return LagrangianSubspace(std::move(*s));
  }
  return std::nullopt;
}

LagrangianEnumerator enumerate_lagrangians(unsigned d, std::size_t n, std::uint64_t cap) {
  return LagrangianEnumerator(d, n, cap);
}

std::map<std::size_t, std::uint64_t> intersection_spectrum(const LagrangianSubspace& m, std::uint64_t cap) {
  std::map<std::size_t, std::uint64_t> spectrum;
  for (std::size_t k = 0; k <= m.n(); ++k) spectrum[k] = 0;
  for (const auto& other : enumerate_lagrangians(m.d(), m.n(), cap)) ++spectrum[intersect(m, other).dim()];
  return spectrum;
}

// ---------------------------------------------------------------------------
// Reduction and extensions

bool ReducedSpace::is_nondegenerate() const {
  if (representatives.empty()) return true;
  const PrimeField field(representatives.front().d());
  return rank(field, gram) == representatives.size();
}

ReducedSpace symplectic_reduce(const Subspace& w) {
  require_even(w);
  const PrimeField field(w.d());
  ReducedSpace out;
  out.radical = intersect(w, complement(w));
  out.representatives = greedy_extension(field, out.radical.generators(), w.generators());
  const std::size_t r = out.representatives.size();
  out.gram.assign(r, Row(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out.gram[i][j] = form(out.representatives[i], out.representatives[j]);
  }
  return out;
}

ExtensionEnumerator::ExtensionEnumerator(const LagrangianSubspace& m, const Subspace& k, std::uint64_t cap)
    : k_(k) {
  require_same_space(m, k);
  if (!m.contains(k)) throw InvalidArgument("extensions_through: K is not contained in M");
  auto frame = dual_frame(m, k);
  e_ = std::move(frame.e);
  f_ = std::move(frame.f);
  const std::size_t count = e_.size();
  total_ = combinatorics::transversal_count(m.d(), static_cast<unsigned>(count));
  if (total_ > cap) {
    throw CapExceeded("enumeration of " + total_.str() + " extensions exceeds cap " + std::to_string(cap));
  }
  entries_.assign(count * (count + 1) / 2, 0);
}

std::optional<LagrangianSubspace> ExtensionEnumerator::next() {
  if (done_) return std::nullopt;
  const std::size_t count = e_.size();
  const unsigned d = k_.d();
  // Upper-triangle index of (i, j), i <= j.
  auto entry = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return entries_[i * count - i * (i - 1) / 2 + (j - i)];
  };
  std::vector<PhaseVector> rows = k_.generators();
  for (std::size_t i = 0; i < count; ++i) {
    PhaseVector v = f_[i];
    for (std::size_t j = 0; j < count; ++j) v = v + e_[j].scaled(entry(i, j));
    rows.push_back(std::move(v));
  }
  LagrangianSubspace result(Subspace::span(d, k_.ambient_dim(), rows));

  std::size_t i = entries_.size();
  bool advanced = false;
  while (i > 0) {
    --i;
    if (++entries_[i] < d) {
      advanced = true;
      break;
    }
    entries_[i] = 0;
  }
  if (!advanced) done_ = true;
  return result;
}

ExtensionEnumerator extensions_through(const LagrangianSubspace& m, const Subspace& k, std::uint64_t cap) {
  return ExtensionEnumerator(m, k, cap);
}

CosetEnumerator::CosetEnumerator(const Subspace& m) : d_(m.d()), ambient_(m.ambient_dim()) {
  std::vector<bool> pivot(ambient_, false);
  for (auto p : m.pivots()) pivot[p] = true;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!pivot[j]) free_columns_.push_back(j);
  }
  values_.assign(free_columns_.size(), 0);
}

std::optional<PhaseVector> CosetEnumerator::next() {
  if (done_) return std::nullopt;
  Row coords(ambient_, 0);
  for (std::size_t i = 0; i < free_columns_.size(); ++i) coords[free_columns_[i]] = values_[i];
  std::size_t i = values_.size();
  bool advanced = false;
  while (i > 0) {
    --i;
    if (++values_[i] < d_) {
      advanced = true;
      break;
    }
    values_[i] = 0;
  }
  if (!advanced) done_ = true;
  return PhaseVector(d_, std::move(coords));
}

CosetEnumerator coset_representatives(const LagrangianSubspace& m) { return CosetEnumerator(m); }

GraphForm is_graph_lagrangian(const LagrangianSubspace& n, const LagrangianSubspace& m) {
  require_same_space(n, m);
  GraphForm out;
  if (!is_transverse(n, m)) return out;
  const PrimeField field(m.d());
  const auto frame = dual_frame(m, Subspace(m.d(), m.ambient_dim()));
  std::vector<Row> basis = rows_of(m.generators());
  for (const auto& g : n.generators()) basis.push_back(g.coords());
  const std::size_t half = m.dim();
  out.adjacency.assign(half, Row(half, 0));
  for (std::size_t i = 0; i < half; ++i) {
    // f_i = m_part + n_part uniquely; n_part - f_i lies in M.
    const auto coeffs = solve_combination(field, basis, frame.f[i].coords());
    PhaseVector n_part = PhaseVector::zero(m.d(), m.ambient_dim());
    for (std::size_t j = 0; j < half; ++j) n_part = n_part + n.generators()[j].scaled((*coeffs)[half + j]);
    out.adjacency[i] = m.coordinates(n_part - frame.f[i]);
  }
  out.is_graph = true;
  return out;
}

}  // namespace symplectic
}  // namespace stabkit

std::size_t std::hash<stabkit::PhaseVector>::operator()(const stabkit::PhaseVector& v) const noexcept {
  std::size_t h = std::hash<unsigned>{}(v.d());
  for (auto x : v.coords()) h = h * 1000003U ^ std::hash<stabkit::Residue>{}(x);
  return h;
}

std::size_t std::hash<stabkit::Subspace>::operator()(const stabkit::Subspace& s) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.ambient_dim()) ^ (std::size_t{s.d()} << 16);
  for (const auto& g : s.generators()) h = h * 1000003U ^ std::hash<stabkit::PhaseVector>{}(g);
  return h;
}
