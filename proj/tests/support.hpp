#pragma once

#include <random>
#include <vector>

#include "stabkit/symplectic.hpp"

namespace stabkit::testing {

inline PhaseVector random_vector(std::mt19937& rng, unsigned d, std::size_t size) {
  std::uniform_int_distribution<Residue> digit(0, d - 1);
  Row coords(size);
  for (auto& c : coords) c = digit(rng);
  return PhaseVector(d, std::move(coords));
}

inline PhaseVector vec(unsigned d, Row coords) { return PhaseVector(d, std::move(coords)); }

inline Subspace span_of(unsigned d, std::size_t ambient, std::vector<Row> rows) {
  std::vector<PhaseVector> vs;
  for (auto& r : rows) vs.emplace_back(d, std::move(r));
  return Subspace::span(d, ambient, vs);
}

inline std::vector<PhaseVector> all_vectors(unsigned d, std::size_t size) {
  std::vector<PhaseVector> out;
  Subspace::full(d, size).for_each_element([&](const Row&, const PhaseVector& v) { out.push_back(v); });
  return out;
}

}  // namespace stabkit::testing
