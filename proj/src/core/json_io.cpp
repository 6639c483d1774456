#include "json_io.hpp"

#include <fstream>

namespace gring {
namespace {

Json complex_json(Complex c) {
  Json j = Json::object();
  j["re"] = c.real();
  j["im"] = c.imag();
  return j;
}

Json optional_int(const std::optional<int>& v) {
  if (v) return Json(*v);
  return Json(nullptr);
}

Json loop_json(const Group& G, const Loop& loop) {
  Json j = Json::object();
  j["morphism"] = morphism_json(G, loop.phi);
  j["base"] = G.str(loop.base);
  j["conjugator"] = G.str(loop.conjugator);
  j["conjugator_order"] = loop.conjugator_order.str();
  j["order_proven_finite"] = loop.conjugator_order.finite;
  return j;
}

}  // namespace

Json ring_json(const Group& G, const RingElement& w) {
  Json terms = Json::array();
  for (const auto& [g, c] : w.terms()) {
    Json t = Json::object();
    t["g"] = G.str(g);
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  Json j = Json::object();
  j["terms"] = std::move(terms);
  return j;
}

RingElement ring_from_json(const Group& G, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("ring element JSON must be an object with a 'terms' array");
  RingElement out;
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("g"))
      throw ParseError("ring element term must be an object with a 'g' word");
    GroupElement g = G.parse(t["g"].get<std::string>());
    double re = t.value("re", 0.0);
    double im = t.value("im", 0.0);
    out.add_term(g, Complex{re, im});
  }
  return out;
}

Json morphism_json(const Group& G, const Morphism& phi) {
  Json j = Json::object();
  j["u"] = G.str(phi.u);
  j["v"] = G.str(phi.v);
  return j;
}

Morphism morphism_from_json(const Group& G, const Json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v"))
    throw ParseError("morphism JSON must be an object with 'u' and 'v' words");
  return Morphism{G.parse(j["u"].get<std::string>()), G.parse(j["v"].get<std::string>())};
}

PotentialData potential_from_json(const Group& G, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("potential JSON must be an object with a 'terms' array");
  PotentialData out;
  for (const Json& t : j["terms"]) {
    GroupElement g = G.parse(t.at("g").get<std::string>());
    out.f[g] = Complex{t.value("re", 0.0), t.value("im", 0.0)};
  }
  if (j.contains("radius") && !j["radius"].is_null()) out.radius = j["radius"].get<int>();
  return out;
}

TabulatedCharacter tabulated_from_json(const Group& G, const Json& j) {
  if (!j.is_object() || !j.contains("v_radius"))
    throw ParseError("tabulated character JSON must declare 'v_radius'");
  TabulatedCharacter out;
  out.v_radius = j["v_radius"].get<int>();
  if (j.contains("source_radius") && !j["source_radius"].is_null())
    out.source_radius = j["source_radius"].get<int>();
  if (j.contains("entries"))
    for (const Json& t : j["entries"]) {
      Morphism phi{G.parse(t.at("u").get<std::string>()), G.parse(t.at("v").get<std::string>())};
      out.table[phi] = Complex{t.value("re", 0.0), t.value("im", 0.0)};
    }
  return out;
}

Json derivation_json(const Group& G, const Derivation& d) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "derivation";
  j["group"] = G.spec_str();
  j["provenance"] = provenance_name(d.provenance());
  j["domain_radius"] = d.domain_radius();
  j["trunc_radius"] = optional_int(d.trunc_radius());
  if (d.twists()) {
    j["sigma"] = d.twists()->first.str(G);
    j["tau"] = d.twists()->second.str(G);
  }
  Json basis = Json::array();
  for (const auto& [g, val] : d.basis()) {
    Json entry = Json::object();
    entry["g"] = G.str(g);
    entry["value"] = ring_json(G, val);
    basis.push_back(std::move(entry));
  }
  j["basis"] = std::move(basis);
  return j;
}

Derivation derivation_from_json(const Group& G, const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("domain_radius"))
    throw ParseError("derivation JSON must carry 'domain_radius' and 'basis'");
  if (j.contains("schema") && j["schema"].get<int>() != kSchemaVersion)
    throw ParseError("unsupported derivation JSON schema version " + j["schema"].dump());
  if (j.contains("kind") && j["kind"].get<std::string>() != "derivation")
    throw ParseError("expected JSON of kind 'derivation', got " + j["kind"].dump());
  if (j.contains("group") && j["group"].get<std::string>() != G.spec_str())
    throw DomainError("derivation JSON was produced for group " +
                      j["group"].get<std::string>() + ", not " + G.spec_str());
  std::map<GroupElement, RingElement> basis;
  for (const Json& entry : j["basis"]) {
    GroupElement g = G.parse(entry.at("g").get<std::string>());
    basis.emplace(g, ring_from_json(G, entry.at("value")));
  }
  std::optional<int> trunc;
  if (j.contains("trunc_radius") && !j["trunc_radius"].is_null())
    trunc = j["trunc_radius"].get<int>();
  Provenance prov = Provenance::Custom;
  if (j.contains("provenance")) {
    std::string name = j["provenance"].get<std::string>();
    for (Provenance p : {Provenance::Inner, Provenance::Central, Provenance::Potential,
                         Provenance::FromCharacter, Provenance::SigmaTauInner})
      if (provenance_name(p) == name) prov = p;
  }
  std::optional<std::pair<EndomorphismSpec, EndomorphismSpec>> twists;
  if (j.contains("sigma") && j.contains("tau"))
    twists = std::make_pair(EndomorphismSpec::parse(G, j["sigma"].get<std::string>()),
                            EndomorphismSpec::parse(G, j["tau"].get<std::string>()));
  return Derivation::custom(G, std::move(basis), j["domain_radius"].get<int>(), trunc, prov,
                            std::move(twists));
}

// ---------------------------------------------------------------------------
// reports

Json ball_report(const Group& G, int radius) {
  Ball ball = G.enumerate_ball(radius);
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "ball";
  j["group"] = G.spec_str();
  j["radius"] = radius;
  j["size"] = ball.size();
  j["saturated"] = ball.saturated;
  Json elements = Json::array();
  for (const GroupElement& g : ball.elements) {
    Json e = Json::object();
    e["g"] = G.str(g);
    e["length"] = ball.length_of(g);
    elements.push_back(std::move(e));
  }
  j["elements"] = std::move(elements);
  return j;
}

Json conjugacy_report(const Group& G, int radius, int closure_radius) {
  ConjugacyPartition part = G.conjugacy_classes_in_ball(radius, closure_radius);
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "conjugacy";
  j["group"] = G.spec_str();
  j["radius"] = part.radius;
  j["closure_radius"] = part.closure_radius;
  Json classes = Json::array();
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    Json c = Json::object();
    c["label"] = part.labels[i];
    c["size"] = part.classes[i].size();
    Json members = Json::array();
    for (const GroupElement& g : part.classes[i]) members.push_back(G.str(g));
    c["elements"] = std::move(members);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

Json subordination_json(const Group& G, const SubordinationReport& r) {
  Json j = Json::object();
  j["norm"] = r.spec.str();
  j["subordinate"] = r.subordinate;
  j["c"] = r.subordinate ? Json(r.c) : Json(nullptr);
  j["observed_c"] = r.observed_c;
  j["probe_radius"] = r.probe_radius;
  Json rows = Json::array();
  for (const SubordinationWitnessRow& row : r.witnesses) {
    Json w = Json::object();
    w["n"] = row.n;
    w["g"] = G.str(row.g);
    w["norm_value"] = row.norm_value;
    w["sup_value"] = row.sup_value;
    w["ratio"] = row.ratio;
    rows.push_back(std::move(w));
  }
  j["witnesses"] = std::move(rows);
  return j;
}

Json additivity_json(const Group& G, const AdditivityResult& r) {
  Json j = Json::object();
  j["ok"] = r.ok;
  j["pairs_checked"] = r.pairs_checked;
  j["pairs_skipped"] = r.pairs_skipped;
  if (r.violation) {
    Json v = Json::object();
    v["psi"] = morphism_json(G, r.violation->psi);
    v["phi"] = morphism_json(G, r.violation->phi);
    v["lhs"] = complex_json(r.violation->lhs);
    v["rhs"] = complex_json(r.violation->rhs);
    v["defect"] = r.violation->defect;
    j["violation"] = std::move(v);
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json loop_triviality_json(const Group& G, const LoopTrivialityResult& r) {
  Json j = Json::object();
  j["quasi_inner"] = r.quasi_inner;
  j["loops_checked"] = r.loops_checked;
  if (r.obstruction) {
    Json o = Json::object();
    o["loop"] = loop_json(G, r.obstruction->loop);
    o["value"] = complex_json(r.obstruction->value);
    j["obstruction"] = std::move(o);
  } else {
    j["obstruction"] = nullptr;
  }
  return j;
}

Json hom_constancy_json(const Group& G, const HomConstancyResult& r) {
  Json j = Json::object();
  switch (r.status) {
    case HomConstancyResult::Status::Constant: j["status"] = "constant"; break;
    case HomConstancyResult::Status::Counterexample: j["status"] = "counterexample"; break;
    case HomConstancyResult::Status::NotApplicable: j["status"] = "not-applicable"; break;
  }
  j["hom_sets_checked"] = r.hom_sets_checked;
  j["morphisms_checked"] = r.morphisms_checked;
  if (r.counterexample) {
    Json c = Json::object();
    c["first"] = morphism_json(G, r.counterexample->first);
    c["second"] = morphism_json(G, r.counterexample->second);
    c["first_value"] = complex_json(r.counterexample->first_value);
    c["second_value"] = complex_json(r.counterexample->second_value);
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  if (r.loop_obstruction) {
    Json o = Json::object();
    o["loop"] = loop_json(G, r.loop_obstruction->loop);
    o["value"] = complex_json(r.loop_obstruction->value);
    j["loop_obstruction"] = std::move(o);
  } else {
    j["loop_obstruction"] = nullptr;
  }
  return j;
}

Json audit_json(const Group& G, const LoopAuditResult& r) {
  Json j = Json::object();
  j["consistent"] = r.consistent;
  j["additivity"] = additivity_json(G, r.additivity);
  j["finite_loops_checked"] = r.finite_loops_checked;
  j["unproven_skipped"] = r.unproven_skipped;
  if (r.contradiction) {
    Json c = Json::object();
    c["loop"] = loop_json(G, r.contradiction->loop);
    c["order"] = r.contradiction->order;
    c["value"] = complex_json(r.contradiction->value);
    j["contradiction"] = std::move(c);
  } else {
    j["contradiction"] = nullptr;
  }
  return j;
}

Json witness_report(const Group& G, const WitnessReport& r) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "witness";
  j["group"] = G.spec_str();
  switch (r.verdict) {
    case WitnessReport::Verdict::WitnessFound: j["verdict"] = "witness-found"; break;
    case WitnessReport::Verdict::NoneFound: j["verdict"] = "none-found"; break;
    case WitnessReport::Verdict::PreconditionFailed: j["verdict"] = "precondition-failed"; break;
  }
  j["radius"] = r.radius;
  j["count"] = r.count;
  j["order_bound"] = r.order_bound;
  j["tol"] = r.tol;
  j["additivity"] = additivity_json(G, r.additivity);
  j["loops_scanned"] = r.loops_scanned;
  j["finite_order_nonzero"] = r.finite_order_nonzero;
  if (r.loop) {
    j["loop"] = loop_json(G, *r.loop);
    j["loop_value"] = complex_json(r.loop_value);
  } else {
    j["loop"] = nullptr;
    j["loop_value"] = nullptr;
  }
  Json rows = Json::array();
  for (const WitnessRow& row : r.rows) {
    Json w = Json::object();
    w["n"] = row.n;
    w["chi_power"] = row.chi_power;
    w["direct"] = row.direct;
    w["sup_tn"] = row.sup_tn;
    w["sup_d_tn"] = row.sup_d_tn ? Json(*row.sup_d_tn) : Json(nullptr);
    w["ratio"] = row.ratio;
    rows.push_back(std::move(w));
  }
  j["rows"] = std::move(rows);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json probe_report(const Group& G, const ProbeReport& r) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "probe";
  j["group"] = G.spec_str();
  j["alpha"] = r.alpha;
  j["theta"] = r.theta;
  switch (r.verdict) {
    case ProbeReport::Verdict::Stabilizing: j["verdict"] = "stabilizing"; break;
    case ProbeReport::Verdict::NotStabilizing: j["verdict"] = "not-stabilizing"; break;
    case ProbeReport::Verdict::InsufficientData: j["verdict"] = "insufficient-data"; break;
  }
  j["partial"] = r.partial;
  Json rows = Json::array();
  for (const ProbeRow& row : r.rows) {
    Json p = Json::object();
    p["radius"] = row.radius;
    p["value"] = row.value;
    p["increment"] = row.increment;
    p["ratio"] = row.ratio ? Json(*row.ratio) : Json(nullptr);
    rows.push_back(std::move(p));
  }
  j["rows"] = std::move(rows);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json lower_bound_json(const Group&, const NormLowerBoundResult& r) {
  Json j = Json::object();
  j["norm"] = r.spec.str();
  j["value"] = r.value;
  j["achiever"] = r.achiever ? Json(r.achiever_text) : Json(nullptr);
  j["evaluated"] = r.evaluated;
  j["skipped"] = r.skipped;
  return j;
}

Json leibniz_report(const Group& G, const Derivation& d, const LeibnizScanResult& r) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "leibniz";
  j["group"] = G.spec_str();
  j["provenance"] = provenance_name(d.provenance());
  j["twisted"] = d.twists().has_value();
  if (d.twists()) {
    j["sigma"] = d.twists()->first.str(G);
    j["tau"] = d.twists()->second.str(G);
  }
  j["domain_radius"] = d.domain_radius();
  j["trunc_radius"] = optional_int(d.trunc_radius());
  j["window"] = optional_int(r.window);
  j["max_defect"] = r.max_defect;
  j["pairs_checked"] = r.pairs_checked;
  j["pairs_skipped"] = r.pairs_skipped;
  j["all_sound"] = r.all_sound;
  if (r.worst_pair) {
    Json w = Json::object();
    w["u"] = G.str(r.worst_pair->first);
    w["v"] = G.str(r.worst_pair->second);
    j["worst_pair"] = std::move(w);
  } else {
    j["worst_pair"] = nullptr;
  }
  return j;
}

Json norms_report(const Group& G, const SubordinationReport& r) {
  Json j = subordination_json(G, r);
  Json out = Json::object();
  out["schema"] = kSchemaVersion;
  out["kind"] = "norms";
  out["group"] = G.spec_str();
  for (auto& [key, value] : j.items()) out[key] = std::move(value);
  return out;
}

Json classification_report(const Group& G, const ClassificationReport& r) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "classify";
  j["group"] = r.group;
  j["derivation"] = Json::object();
  j["derivation"]["provenance"] = r.derivation_provenance;
  j["derivation"]["exact"] = r.derivation_exact;
  j["derivation"]["domain_radius"] = r.domain_radius;
  j["derivation"]["trunc_radius"] = optional_int(r.trunc_radius);
  j["ambient_norm"] = r.ambient.str();
  j["radius"] = r.radius;
  j["tol"] = r.tol;
  j["witness_count"] = r.witness_count;
  j["order_bound"] = r.order_bound;
  j["character"] = r.chi_description;
  j["additivity"] = r.additivity ? additivity_json(G, *r.additivity) : Json(nullptr);
  j["loop_triviality"] =
      r.loop_triviality ? loop_triviality_json(G, *r.loop_triviality) : Json(nullptr);
  j["hom_constancy"] = r.hom_constancy ? hom_constancy_json(G, *r.hom_constancy) : Json(nullptr);
  j["finite_order_audit"] = r.audit ? audit_json(G, *r.audit) : Json(nullptr);
  j["subordination"] = r.subordination ? subordination_json(G, *r.subordination) : Json(nullptr);
  j["witness"] = r.witness ? witness_report(G, *r.witness) : Json(nullptr);
  j["probe"] = r.probe ? probe_report(G, *r.probe) : Json(nullptr);
  j["lower_bound"] = r.lower_bound ? lower_bound_json(G, *r.lower_bound) : Json(nullptr);
  j["lower_bound_by_radius"] = r.lower_bound_by_radius;
  j["boundedness_plateau"] = r.boundedness_plateau;
  j["bounded_verified"] = r.bounded_verified;
  j["theorem_consistent"] = r.theorem_consistent;
  j["verdict"] = r.verdict;
  Json errors = Json::array();
  for (const StageError& e : r.errors) {
    Json err = Json::object();
    err["stage"] = e.stage;
    err["message"] = e.message;
    errors.push_back(std::move(err));
  }
  j["errors"] = std::move(errors);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open JSON file '" + path + "'");
  try {
    Json j;
    in >> j;
    return j;
  } catch (const Json::exception& e) {
    throw ParseError("cannot parse JSON file '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

}  // namespace gring
