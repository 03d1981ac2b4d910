#include "stabkit/serialize.hpp"

#include <limits>

#include "stabkit/errors.hpp"

namespace stabkit::serialize {

namespace {

PhaseVector vector_from_json(unsigned d, const Json& j) {
  Row coords;
  for (const auto& x : j) coords.push_back(x.get<Residue>());
  return PhaseVector(d, std::move(coords));
}

}  // namespace

Json subspace_to_json(const Subspace& s) {
  Json generators = Json::array();
  for (const auto& g : s.generators()) generators.push_back(g.coords());
  return Json{{"d", s.d()}, {"n", s.n()}, {"dim", s.dim()}, {"generators", std::move(generators)}};
}

Subspace subspace_from_json(const Json& j) {
  const auto d = j.at("d").get<unsigned>();
  const auto n = j.at("n").get<std::size_t>();
  std::vector<PhaseVector> rows;
  for (const auto& g : j.at("generators")) rows.push_back(vector_from_json(d, g));
  Subspace s = Subspace::span(d, 2 * n, rows);
  if (s.dim() != j.at("dim").get<std::size_t>()) throw InvalidArgument("subspace JSON: dim disagrees with generators");
  return s;
}

Json state_to_json(const StabilizerState& s, const std::optional<StateVector>& amplitudes) {
  Json out{{"d", s.d()},
           {"n", s.n()},
           {"lagrangian", subspace_to_json(s.lagrangian())},
           {"zeta", s.zeta().coords()}};
  if (amplitudes) {
    Json amps = Json::array();
    for (const auto& a : *amplitudes) amps.push_back({a.real(), a.imag()});
    out["amplitudes"] = std::move(amps);
  }
  return out;
}

StabilizerState state_from_json(const Json& j) {
  const auto d = j.at("d").get<unsigned>();
  LagrangianSubspace m(subspace_from_json(j.at("lagrangian")));
  return StabilizerState(std::move(m), vector_from_json(d, j.at("zeta")));
}

std::optional<StateVector> amplitudes_from_json(const Json& j) {
  if (!j.contains("amplitudes")) return std::nullopt;
  StateVector out;
  for (const auto& a : j.at("amplitudes")) out.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
  return out;
}

Json report_to_json(const FramePotentialReport& r) {
  Json out{{"d", r.d},
           {"n", r.n},
           {"t", r.t},
           {"D", nullptr},
           {"recursion", to_fraction_string(r.recursion)},
           {"combinatorial", to_fraction_string(r.combinatorial)},
           {"bruteforce", nullptr},
           {"fixed_state", nullptr},
           {"welch", to_fraction_string(r.welch)},
           {"is_design", r.is_design}};
  if (r.dimension <= std::numeric_limits<std::uint64_t>::max()) {
    out["D"] = r.dimension.convert_to<std::uint64_t>();
  } else {
    out["D"] = r.dimension.str();
  }
  if (r.bruteforce) out["bruteforce"] = *r.bruteforce;
  if (r.fixed_state) out["fixed_state"] = *r.fixed_state;
  return out;
}

FramePotentialReport report_from_json(const Json& j) {
  FramePotentialReport r;
  r.d = j.at("d").get<unsigned>();
  r.n = j.at("n").get<unsigned>();
  r.t = j.at("t").get<unsigned>();
  const auto& dim = j.at("D");
  r.dimension = dim.is_string() ? ExactInteger(dim.get<std::string>()) : ExactInteger(dim.get<std::uint64_t>());
  r.recursion = parse_fraction(j.at("recursion").get<std::string>());
  r.combinatorial = parse_fraction(j.at("combinatorial").get<std::string>());
  if (j.contains("bruteforce") && !j.at("bruteforce").is_null()) r.bruteforce = j.at("bruteforce").get<double>();
  if (j.contains("fixed_state") && !j.at("fixed_state").is_null()) r.fixed_state = j.at("fixed_state").get<double>();
  r.welch = parse_fraction(j.at("welch").get<std::string>());
  r.is_design = j.at("is_design").get<bool>();
  return r;
}

}  // namespace stabkit::serialize
