#include "stabkit/potential.hpp"

#include <string>

#include "stabkit/combinatorics.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/parallel.hpp"

namespace stabkit::potential {

namespace {

void require_args(unsigned d, unsigned n, unsigned t) {
  combinatorics::require_prime(d);
  if (n == 0) throw InvalidArgument("n must be >= 1");
  if (t == 0) throw InvalidArgument("t must be >= 1");
}

double overlap_power(const StateVector& a, const StateVector& b, unsigned t) {
  const double p = std::norm(kernels::inner(a, b));
  double out = 1.0;
  for (unsigned i = 0; i < t; ++i) out *= p;
  return out;
}

void require_within(unsigned d, unsigned n, std::uint64_t cap, const char* what) {
  const ExactInteger total = combinatorics::stabilizer_count(d, n);
  if (total > cap) {
    throw CapExceeded(std::string(what) + ": S(" + std::to_string(d) + "," + std::to_string(n) + ") = " +
                      total.str() + " states exceeds the cap " + std::to_string(cap));
  }
}

bool within(unsigned d, unsigned n, std::uint64_t cap) { return combinatorics::stabilizer_count(d, n) <= cap; }

}  // namespace

ExactRational recursion_factor(unsigned d, unsigned n, unsigned t) {
  const ExactInteger dd(d);
  const ExactRational numerator = rpow(dd, static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(t) - 2)) + 1;
  return numerator / ExactRational(dd * (ipow(dd, n + 1) + 1));
}

ExactRational frame_potential_recursion(unsigned d, unsigned n, unsigned t) {
  require_args(d, n, t);
  const ExactInteger dd(d);
  ExactRational value = (rpow(dd, 2 - static_cast<std::int64_t>(t)) + 1) / ExactRational((dd + 1) * dd);
  for (unsigned k = 1; k < n; ++k) value *= recursion_factor(d, k, t);
  return value;
}

ExactRational frame_potential_combinatorial(unsigned d, unsigned n, unsigned t) {
  require_args(d, n, t);
  ExactRational sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const std::int64_t m = static_cast<std::int64_t>(n) - k;
    const std::int64_t exponent = m * (m + 3 - 2 * static_cast<std::int64_t>(t)) / 2;
    sum += ExactRational(combinatorics::gaussian_binomial(n, k, d)) * rpow(ExactInteger(d), exponent);
  }
  return sum / ExactRational(combinatorics::stabilizer_count(d, n));
}

std::vector<StateVector> realize_states(unsigned d, unsigned n, std::uint64_t cap, std::size_t matrix_cap,
                                        unsigned threads) {
  require_args(d, n, 1);
  require_within(d, n, cap, "state realization");
  weyl::hilbert_dim(d, n, matrix_cap);
  const auto states = stabilizer::enumerate_states(d, n, cap).collect();
  std::vector<StateVector> out(states.size());
  parallel::parallel_for(states.size(), threads,
                         [&](std::size_t i) { out[i] = stabilizer::state_vector(states[i], matrix_cap); });
  return out;
}

double bruteforce_from_vectors(std::span<const StateVector> states, unsigned t, unsigned threads) {
  const std::size_t s = states.size();
  if (s == 0) throw InvalidArgument("bruteforce: empty ensemble");
  std::vector<double> rows(s);
  parallel::parallel_for(s, threads, [&](std::size_t i) {
    std::vector<double> terms(s);
    for (std::size_t j = 0; j < s; ++j) terms[j] = overlap_power(states[i], states[j], t);
    rows[i] = parallel::pairwise_sum(terms);
  });
  const double count = static_cast<double>(s);
  return parallel::pairwise_sum(rows) / (count * count);
}

double fixed_state_from_vectors(std::span<const StateVector> states, unsigned t) {
  const std::size_t s = states.size();
  if (s == 0) throw InvalidArgument("fixed-state: empty ensemble");
  std::vector<double> terms(s);
  for (std::size_t i = 0; i < s; ++i) terms[i] = overlap_power(states[0], states[i], t);
  return parallel::pairwise_sum(terms) / static_cast<double>(s);
}

double frame_potential_bruteforce(unsigned d, unsigned n, unsigned t, const PotentialOptions& options) {
  require_args(d, n, t);
  require_within(d, n, options.bruteforce_cap, "bruteforce");
  const auto states = realize_states(d, n, options.bruteforce_cap, options.matrix_cap, options.threads);
  return bruteforce_from_vectors(states, t, options.threads);
}

double frame_potential_fixed_state(unsigned d, unsigned n, unsigned t, const PotentialOptions& options) {
  require_args(d, n, t);
  require_within(d, n, options.single_sum_cap, "fixed-state");
  const auto states = realize_states(d, n, options.single_sum_cap, options.matrix_cap, options.threads);
  return fixed_state_from_vectors(states, t);
}

FramePotentialReport report(unsigned d, unsigned n, unsigned t) {
  FramePotentialReport r;
  r.d = d;
  r.n = n;
  r.t = t;
  r.dimension = ipow(ExactInteger(d), n);
  r.recursion = frame_potential_recursion(d, n, t);
  r.combinatorial = frame_potential_combinatorial(d, n, t);
  r.welch = combinatorics::welch_bound(r.dimension, t);
  r.is_design = r.combinatorial == r.welch;
  return r;
}

std::vector<FramePotentialReport> design_verdict(unsigned d, unsigned n, unsigned t_max,
                                                 const PotentialOptions& options) {
  require_args(d, n, 1);
  if (t_max == 0) throw InvalidArgument("t_max must be >= 1");
  const bool bruteforce = options.with_bruteforce && within(d, n, options.bruteforce_cap);
  const bool fixed = options.with_fixed_state && within(d, n, options.single_sum_cap);
  std::vector<StateVector> states;
  if (bruteforce || fixed) {
    states = realize_states(d, n, std::max(options.bruteforce_cap, options.single_sum_cap), options.matrix_cap,
                            options.threads);
  }
  std::vector<FramePotentialReport> out;
  for (unsigned t = 1; t <= t_max; ++t) {
    auto r = report(d, n, t);
    if (bruteforce) r.bruteforce = bruteforce_from_vectors(states, t, options.threads);
    if (fixed) r.fixed_state = fixed_state_from_vectors(states, t);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace stabkit::potential
