#pragma once

#include <json.hpp>

#include "analysis.hpp"

namespace gring {

/// Ordered JSON keeps key order stable so that reports are byte-identical
/// across runs.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json ring_json(const Group& G, const RingElement& w);
RingElement ring_from_json(const Group& G, const Json& j);

Json morphism_json(const Group& G, const Morphism& phi);
Morphism morphism_from_json(const Group& G, const Json& j);

/// Potential payload: {"terms": [{"g": word, "re": r, "im": i}, ...],
/// "radius": optional int}.
struct PotentialData {
  std::map<GroupElement, Complex> f;
  std::optional<int> radius;
};
PotentialData potential_from_json(const Group& G, const Json& j);

/// Tabulated-character payload: {"v_radius": int, "source_radius": int|null,
/// "entries": [{"u": word, "v": word, "re": r, "im": i}, ...]}.
TabulatedCharacter tabulated_from_json(const Group& G, const Json& j);

Json derivation_json(const Group& G, const Derivation& d);
Derivation derivation_from_json(const Group& G, const Json& j);

// --------------------------------------------------------------------------
// reports (each top-level report carries "schema" and "kind")

Json ball_report(const Group& G, int radius);
Json conjugacy_report(const Group& G, int radius, int closure_radius);
Json subordination_json(const Group& G, const SubordinationReport& r);
Json additivity_json(const Group& G, const AdditivityResult& r);
Json loop_triviality_json(const Group& G, const LoopTrivialityResult& r);
Json hom_constancy_json(const Group& G, const HomConstancyResult& r);
Json audit_json(const Group& G, const LoopAuditResult& r);
Json witness_report(const Group& G, const WitnessReport& r);
Json probe_report(const Group& G, const ProbeReport& r);
Json lower_bound_json(const Group& G, const NormLowerBoundResult& r);
Json leibniz_report(const Group& G, const Derivation& d, const LeibnizScanResult& r);
Json norms_report(const Group& G, const SubordinationReport& r);
Json classification_report(const Group& G, const ClassificationReport& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace gring
