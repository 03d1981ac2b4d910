#include <random>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/stabilizer.hpp"
#include "support.hpp"

using namespace stabkit;
using namespace stabkit::stabilizer;
using stabkit::testing::all_vectors;
using stabkit::testing::random_vector;
using stabkit::testing::span_of;
using stabkit::testing::vec;

namespace {

double overlap_numeric(const StateVector& a, const StateVector& b) { return std::norm(kernels::inner(a, b)); }

std::vector<LagrangianSubspace> lagrangians(unsigned d, std::size_t n) {
  return symplectic::enumerate_lagrangians(d, n).collect();
}

// |<u|psi>|^2 for a fixed ray u, compared up to phase.
bool same_ray(const StateVector& a, const StateVector& b) { return std::abs(overlap_numeric(a, b) - 1.0) < 1e-12; }

}  // namespace

TEST_CASE("states canonicalize their coset representative") {
  const LagrangianSubspace m(span_of(3, 2, {{1, 2}}));
  const StabilizerState a(m, vec(3, {0, 1}));
  const StabilizerState b(m, vec(3, {1, 0}));  // (1,0) = (0,1) + 2(1,2) mod 3
  CHECK(a == b);
  CHECK(std::hash<StabilizerState>{}(a) == std::hash<StabilizerState>{}(b));
  CHECK(a.zeta() == vec(3, {0, 1}));
  CHECK_THROWS_AS(StabilizerState(m, vec(3, {0, 1, 0, 0})), DimensionMismatch);
}

TEST_CASE("projector for the Z-axis Lagrangian is |0><0|") {
  const LagrangianSubspace m(span_of(2, 2, {{1, 0}}));
  const auto rho = projector(m, vec(2, {0, 0}));
  CHECK(std::abs(rho(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(rho(1, 1)) < 1e-15);
  CHECK(std::abs(rho(0, 1)) < 1e-15);
  const auto rho1 = projector(m, vec(2, {0, 1}));
  CHECK(std::abs(rho1(1, 1) - 1.0) < 1e-15);
}

TEST_CASE("projectors are rank-one Hermitian projectors") {
  std::mt19937 rng(10);
  for (auto [d, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto all = lagrangians(d, n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& m = all[pick(rng)];
      const auto v = random_vector(rng, d, 2 * n);
      const auto rho = projector(m, v);
      CHECK(std::abs(rho.trace() - 1.0) <= 1e-10);
      CHECK(max_abs_diff(rho * rho, rho) <= 1e-10);
      CHECK(max_abs_diff(rho.adjoint(), rho) <= 1e-10);
      // Rank one: rho = |psi><psi| for its normalized range vector.
      const auto psi = state_vector(StabilizerState(m, v));
      DenseOperator outer(rho.dim());
      for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) outer(i, j) = psi[i] * std::conj(psi[j]);
      }
      CHECK(max_abs_diff(outer, rho) <= 1e-10);
    }
  }
}

TEST_CASE("the six single-qubit stabilizer states") {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  const std::vector<StateVector> expected{{1.0, 0.0}, {0.0, 1.0}, {r, r}, {r, -r}, {r, i * r}, {r, -i * r}};
  const auto states = enumerate_states(2, 1).collect();
  REQUIRE(states.size() == 6);
  std::vector<bool> matched(expected.size(), false);
  for (const auto& s : states) {
    const auto psi = state_vector(s);
    int hits = 0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (same_ray(psi, expected[k])) {
        matched[k] = true;
        ++hits;
      }
    }
    CHECK(hits == 1);
  }
  for (bool m : matched) CHECK(m);
}

TEST_CASE("state vectors: normalization, phase convention, eigenvalue equations") {
  for (auto [d, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    for (const auto& s : enumerate_states(d, n)) {
      const auto psi = state_vector(s);
      CHECK(std::abs(kernels::norm(psi) - 1.0) <= 1e-12);
      for (const auto& a : psi) {
        if (std::abs(a) > 1e-8) {
          CHECK(std::abs(a.imag()) <= 1e-15);
          CHECK(a.real() > 0.0);
          break;
        }
      }
      CHECK(eigen_residual(s, psi) <= 1e-10);
    }
  }
}

TEST_CASE("the states of one Lagrangian form an orthonormal basis") {
  for (auto [d, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    for (const auto& m : lagrangians(d, n)) {
      std::vector<StateVector> basis;
      for (const auto& zeta : symplectic::coset_representatives(m)) basis.push_back(state_vector(StabilizerState(m, zeta)));
      CHECK(basis.size() == weyl::hilbert_dim(d, n));
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
          CHECK(std::abs(kernels::inner(basis[a], basis[b]) - Complex(a == b ? 1.0 : 0.0)) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("overlap_exact examples") {
  const LagrangianSubspace z(span_of(2, 2, {{1, 0}}));
  const LagrangianSubspace x(span_of(2, 2, {{0, 1}}));
  const StabilizerState zero(z, vec(2, {0, 0}));
  const StabilizerState one(z, vec(2, {0, 1}));
  const StabilizerState plus(x, vec(2, {0, 0}));
  CHECK(overlap_exact(zero, zero) == 1);
  CHECK(overlap_exact(zero, one) == 0);
  CHECK(overlap_exact(zero, plus) == ExactRational(1, 2));
  CHECK_THROWS_AS(overlap_exact(zero, StabilizerState(LagrangianSubspace(span_of(3, 2, {{1, 0}})), vec(3, {0, 0}))),
                  DimensionMismatch);
}

TEST_CASE("overlap_exact agrees with realized vectors on every pair") {
  for (auto [d, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const auto states = enumerate_states(d, n).collect();
    std::vector<StateVector> vectors;
    for (const auto& s : states) vectors.push_back(state_vector(s));
    for (std::size_t a = 0; a < states.size(); a += (d == 3 && n == 2) ? 5 : 1) {
      for (std::size_t b = 0; b < states.size(); ++b) {
        const ExactRational exact = overlap_exact(states[a], states[b]);
        CHECK(std::abs(overlap_numeric(vectors[a], vectors[b]) - to_double(exact)) <= 1e-10);
        if (exact == 1) CHECK(states[a] == states[b]);
      }
    }
  }
}

TEST_CASE("overlap condition needs the basis phases at even d") {
  // Bell pair stabilized by ZZ, XX against the product state stabilized by
  // YI, IY. Both contain YY = -(XX)(ZZ). Comparing only the coset labels on
  // K would ignore that w_B(YY) differs from w(YY) by a sign.
  const LagrangianSubspace bell(span_of(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  const LagrangianSubspace product(span_of(2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  const auto k = symplectic::intersect(bell, product);
  REQUIRE(k.dim() == 1);
  int label_only_disagreements = 0;
  for (const auto& zeta : symplectic::coset_representatives(bell)) {
    for (const auto& iota : symplectic::coset_representatives(product)) {
      const StabilizerState a(bell, zeta), b(product, iota);
      const double numeric = overlap_numeric(state_vector(a), state_vector(b));
      CHECK(std::abs(numeric - to_double(overlap_exact(a, b))) <= 1e-12);
      bool labels_agree = true;
      for (const auto& g : k.generators()) labels_agree = labels_agree && symplectic::form(zeta - iota, g) == 0;
      const double label_prediction = labels_agree ? 0.5 : 0.0;
      if (std::abs(label_prediction - numeric) > 0.25) ++label_only_disagreements;
    }
  }
  CHECK(label_only_disagreements > 0);
}

TEST_CASE("compatible bases") {
  const LagrangianSubspace m(span_of(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  auto [bm, bn] = compatible_bases(m, m);
  CHECK(bm == bn);
  const LagrangianSubspace q(span_of(2, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  std::tie(bm, bn) = compatible_bases(m, q);
  CHECK(bm == m.generators());
  CHECK(bn == q.generators());

  // tr(w_{B_M}(x) w_{B_N}(-y)) = d^n [x == y] on pairs sharing a line.
  for (auto [d, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 2}}) {
    const auto all = lagrangians(d, n);
    const double dim = static_cast<double>(weyl::hilbert_dim(d, n));
    int pairs = 0;
    for (std::size_t i = 0; i < all.size() && pairs < 12; ++i) {
      for (std::size_t j = 0; j < all.size() && pairs < 12; ++j) {
        if (symplectic::intersect(all[i], all[j]).dim() != 1) continue;
        ++pairs;
        const auto bases = compatible_bases(all[i], all[j]);
        const auto& b1 = bases.first;
        const auto& b2 = bases.second;
        CHECK(b1.front() == b2.front());
        CHECK(Subspace::span(d, 2 * n, b1) == all[i]);
        CHECK(Subspace::span(d, 2 * n, b2) == all[j]);
        all[i].for_each_element([&](const Row&, const PhaseVector& x) {
          all[j].for_each_element([&](const Row&, const PhaseVector& y) {
            const Complex tr = (weyl::weyl_basis(b1, x) * weyl::weyl_basis(b2, -y)).trace();
            CHECK(std::abs(tr - Complex(x == y ? dim : 0.0)) <= 1e-10);
          });
        });
      }
    }
    CHECK(pairs == 12);
  }
}

TEST_CASE("state enumeration") {
  CHECK(enumerate_states(2, 1).collect().size() == 6);
  CHECK(enumerate_states(2, 2).collect().size() == 60);
  CHECK(enumerate_states(3, 1).collect().size() == 12);
  for (auto [d, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 2}, {2, 3}}) {
    auto stream = enumerate_states(d, n);
    CHECK(stream.total() == combinatorics::stabilizer_count(d, static_cast<unsigned>(n)));
    const auto states = stream.collect();
    CHECK(ExactInteger(states.size()) == combinatorics::stabilizer_count(d, static_cast<unsigned>(n)));
    CHECK(std::unordered_set<StabilizerState>(states.begin(), states.end()).size() == states.size());
  }
  CHECK_THROWS_AS(enumerate_states(2, 3, 1000), CapExceeded);
  CHECK_THROWS_AS(enumerate_states(4, 1), InvalidArgument);
}
