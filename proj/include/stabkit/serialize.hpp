#pragma once

// JSON encodings of subspaces, states and frame-potential reports. Rationals
// are strings "p/q"; every from_json is the exact inverse of to_json.

#include <optional>

#include "json.hpp"

#include "stabkit/potential.hpp"
#include "stabkit/stabilizer.hpp"
#include "stabkit/symplectic.hpp"

namespace stabkit::serialize {

using Json = nlohmann::json;

/// {d, n, dim, generators: [[...], ...]}
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// {d, n, lagrangian, zeta[, amplitudes: [[re, im], ...]]}
Json state_to_json(const StabilizerState& s, const std::optional<StateVector>& amplitudes = std::nullopt);
StabilizerState state_from_json(const Json& j);
std::optional<StateVector> amplitudes_from_json(const Json& j);

/// {d, n, t, D, recursion, combinatorial, bruteforce, fixed_state, welch, is_design}
Json report_to_json(const FramePotentialReport& r);
FramePotentialReport report_from_json(const Json& j);

}  // namespace stabkit::serialize
