#include <cmath>
#include <cstring>

#include "doctest.h"
#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/parallel.hpp"
#include "stabkit/potential.hpp"

using namespace stabkit;
using namespace stabkit::potential;

namespace {

ExactRational welch(unsigned d, unsigned n, unsigned t) {
  return combinatorics::welch_bound(ipow(ExactInteger(d), n), t);
}

// The frame potential from the intersection spectrum: every N with
// dim(M cap N) = k contributes an orthonormal basis of which d^{n-k} states
// overlap the reference with |<.,.>|^2 = d^{k-n} and the rest are orthogonal.
ExactRational from_kappa(unsigned d, unsigned n, unsigned t) {
  ExactRational sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const ExactRational overlap = rpow(ExactInteger(d), static_cast<std::int64_t>(k) - n);
    ExactRational power = 1;
    for (unsigned i = 0; i < t; ++i) power *= overlap;
    sum += ExactRational(combinatorics::kappa(d, n, k) * ipow(ExactInteger(d), n - k)) * power;
  }
  return sum / ExactRational(combinatorics::stabilizer_count(d, n));
}

}  // namespace

TEST_CASE("recursion engine examples") {
  CHECK(frame_potential_recursion(2, 1, 3) == ExactRational(1, 4));
  CHECK(frame_potential_recursion(2, 1, 4) == ExactRational(5, 24));
  CHECK(frame_potential_recursion(2, 1, 2) == ExactRational(1, 3));
  CHECK(frame_potential_recursion(2, 2, 2) == ExactRational(1, 10));
  CHECK_THROWS_AS(frame_potential_recursion(4, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(frame_potential_recursion(2, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(frame_potential_recursion(2, 1, 0), InvalidArgument);
}

TEST_CASE("combinatorial engine examples") {
  CHECK(frame_potential_combinatorial(2, 1, 3) == ExactRational(1, 4));
  CHECK(frame_potential_combinatorial(2, 2, 2) == combinatorics::welch_bound(4, 2));
  CHECK(frame_potential_combinatorial(3, 1, 3) == ExactRational(1, 9));
  CHECK(frame_potential_combinatorial(3, 1, 3) > combinatorics::welch_bound(3, 3));
}

TEST_CASE("exact engines agree with each other and with the kappa sum") {
  for (unsigned d : {2U, 3U, 5U, 7U}) {
    for (unsigned n = 1; n <= 5; ++n) {
      for (unsigned t = 1; t <= 8; ++t) {
        const auto r = frame_potential_recursion(d, n, t);
        CHECK(r == frame_potential_combinatorial(d, n, t));
        CHECK(r == from_kappa(d, n, t));
        CHECK(r >= welch(d, n, t));
      }
    }
  }
}

TEST_CASE("recursion factor at t = 2 is the ratio of consecutive Welch bounds") {
  for (unsigned d : {2U, 3U, 5U, 7U}) {
    for (unsigned n = 1; n <= 6; ++n) {
      CHECK(recursion_factor(d, n, 2) == welch(d, n + 1, 2) / welch(d, n, 2));
    }
  }
}

TEST_CASE("design pattern") {
  for (unsigned d : {2U, 3U, 5U}) {
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(frame_potential_combinatorial(d, n, 1) == welch(d, n, 1));
      CHECK(frame_potential_combinatorial(d, n, 2) == welch(d, n, 2));
      if (d == 2) {
        CHECK(frame_potential_combinatorial(d, n, 3) == welch(d, n, 3));
      } else {
        CHECK(frame_potential_combinatorial(d, n, 3) > welch(d, n, 3));
      }
      for (unsigned t = 4; t <= 6; ++t) CHECK(frame_potential_combinatorial(d, n, t) > welch(d, n, t));
    }
  }
}

TEST_CASE("design_verdict") {
  auto flags = [](unsigned d, unsigned n, unsigned t_max) {
    std::vector<bool> out;
    for (const auto& r : design_verdict(d, n, t_max)) out.push_back(r.is_design);
    return out;
  };
  CHECK(flags(2, 3, 4) == std::vector<bool>{true, true, true, false});
  CHECK(flags(3, 2, 3) == std::vector<bool>{true, true, false});
  CHECK(flags(5, 1, 2) == std::vector<bool>{true, true});
  const auto reports = design_verdict(2, 2, 3, {.with_bruteforce = true, .with_fixed_state = true});
  for (const auto& r : reports) {
    CHECK(r.dimension == 4);
    CHECK(r.recursion == r.combinatorial);
    REQUIRE(r.bruteforce.has_value());
    REQUIRE(r.fixed_state.has_value());
    CHECK(*r.bruteforce == doctest::Approx(to_double(r.combinatorial)).epsilon(1e-9));
  }
  CHECK_FALSE(design_verdict(2, 5, 1, {.with_bruteforce = true})[0].bruteforce.has_value());
  CHECK_THROWS_AS(design_verdict(2, 1, 0), InvalidArgument);
}

TEST_CASE("brute force over the single-qubit states") {
  for (unsigned t = 1; t <= 6; ++t) {
    const double expected = (6.0 + 24.0 * std::pow(2.0, -static_cast<double>(t))) / 36.0;
    CHECK(std::abs(frame_potential_bruteforce(2, 1, t) - expected) <= 1e-9);
  }
  CHECK(std::abs(frame_potential_bruteforce(2, 1, 3) - 0.25) <= 1e-9);
  CHECK(std::abs(frame_potential_bruteforce(2, 1, 2) - 1.0 / 3.0) <= 1e-9);
  CHECK(std::abs(frame_potential_bruteforce(3, 1, 2) - 1.0 / 6.0) <= 1e-9);
}

TEST_CASE("numeric engines agree with the exact value") {
  for (unsigned n = 1; n <= 2; ++n) {
    const auto states = realize_states(2, n, kDefaultBruteforceCap);
    for (unsigned t = 1; t <= 6; ++t) {
      const double exact = to_double(frame_potential_combinatorial(2, n, t));
      CHECK(std::abs(bruteforce_from_vectors(states, t) - exact) <= 1e-9);
      CHECK(std::abs(fixed_state_from_vectors(states, t) - exact) <= 1e-9);
    }
  }
  for (auto [d, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 1}, {3, 2}}) {
    for (unsigned t = 1; t <= 6; ++t) {
      CHECK(std::abs(frame_potential_fixed_state(d, n, t) - to_double(frame_potential_combinatorial(d, n, t))) <=
            1e-9);
    }
  }
  CHECK(std::abs(frame_potential_fixed_state(2, 1, 1) - 0.5) <= 1e-12);
}

TEST_CASE("brute force is independent of the thread count") {
  const auto states = realize_states(2, 2, kDefaultBruteforceCap);
  const double one = bruteforce_from_vectors(states, 3, 1);
  for (unsigned threads : {2U, 3U, 8U}) {
    const double many = bruteforce_from_vectors(states, 3, threads);
    CHECK(std::memcmp(&one, &many, sizeof one) == 0);
  }
  const auto again = realize_states(2, 2, kDefaultBruteforceCap, kDefaultMatrixCap, 4);
  REQUIRE(again.size() == states.size());
  for (std::size_t i = 0; i < states.size(); ++i) CHECK(again[i] == states[i]);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(frame_potential_bruteforce(2, 4, 2), CapExceeded);
  CHECK_THROWS_AS(frame_potential_fixed_state(2, 5, 2), CapExceeded);
  CHECK_THROWS_AS(frame_potential_bruteforce(2, 2, 2, {.bruteforce_cap = 10}), CapExceeded);
  CHECK_THROWS_AS(bruteforce_from_vectors({}, 2), InvalidArgument);
}

TEST_CASE("pairwise sum and parallel_for") {
  std::vector<double> values(1000);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = 1.0 / static_cast<double>(i + 1);
  double naive = 0.0;
  for (double v : values) naive += v;
  CHECK(parallel::pairwise_sum(values) == doctest::Approx(naive).epsilon(1e-14));
  CHECK(parallel::pairwise_sum({}) == 0.0);

  std::vector<int> hit(257, 0);
  parallel::parallel_for(hit.size(), 5, [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
  CHECK_THROWS_AS(parallel::parallel_for(10, 3,
                                         [](std::size_t i) {
                                           if (i == 7) throw InvalidArgument("boom");
                                         }),
                  InvalidArgument);
  CHECK(parallel::resolve_threads(3U) == 3);
  CHECK_THROWS_AS(parallel::resolve_threads(0U), InvalidArgument);
}
