#include "gring/gring.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "../core/json_io.hpp"
#include "../core/specstr.hpp"

using namespace gring;

struct gring_group {
  Group impl;
  explicit gring_group(const char* spec) : impl(std::string(spec)) {}
};

struct gring_ring {
  const gring_group* owner;
  RingElement impl;
};

struct gring_character {
  const gring_group* owner;
  Character impl;
};

struct gring_derivation {
  const gring_group* owner;
  Derivation impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gring_status fail(gring_status code, const char* message) {
  g_last_error = message;
  return code;
}

/// Run `fn`, mapping the library's exception taxonomy onto status codes.
template <typename Fn>
gring_status guarded(Fn&& fn) {
  try {
    fn();
    return GRING_OK;
  } catch (const ParseError& e) {
    return fail(GRING_ERR_PARSE, e.what());
  } catch (const OutOfRangeError& e) {
    return fail(GRING_ERR_OUT_OF_RANGE, e.what());
  } catch (const ResourceError& e) {
    return fail(GRING_ERR_RESOURCE, e.what());
  } catch (const ComposeError& e) {
    return fail(GRING_ERR_COMPOSE, e.what());
  } catch (const DomainError& e) {
    return fail(GRING_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GRING_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(GRING_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GRING_ERR_INTERNAL, "unknown error");
  }
}

gring_status require(bool ok, const char* message) {
  return ok ? GRING_OK : fail(GRING_ERR_INVALID_ARG, message);
}

}  // namespace

extern "C" {

const char* gring_version(void) { return "1.0.0"; }

const char* gring_status_name(gring_status status) {
  switch (status) {
    case GRING_OK: return "ok";
    case GRING_ERR_INVALID_ARG: return "invalid-argument";
    case GRING_ERR_PARSE: return "parse-error";
    case GRING_ERR_DOMAIN: return "domain-error";
    case GRING_ERR_OUT_OF_RANGE: return "out-of-range";
    case GRING_ERR_RESOURCE: return "resource-exhausted";
    case GRING_ERR_COMPOSE: return "not-composable";
    case GRING_ERR_NOMEM: return "out-of-memory";
    case GRING_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* gring_last_error(void) { return g_last_error.c_str(); }

void gring_string_free(char* s) { std::free(s); }

/* ---------------------------------------------------------------- groups */

gring_status gring_group_create(const char* spec, gring_group** out) {
  if (gring_status s = require(spec && out, "gring_group_create: null argument")) return s;
  return guarded([&] { *out = new gring_group(spec); });
}

void gring_group_destroy(gring_group* group) { delete group; }

gring_status gring_group_spec(const gring_group* group, char** out) {
  if (gring_status s = require(group && out, "gring_group_spec: null argument")) return s;
  return guarded([&] { *out = dup_string(group->impl.spec_str()); });
}

gring_status gring_normalize(const gring_group* group, const char* word, char** out) {
  if (gring_status s = require(group && word && out, "gring_normalize: null argument")) return s;
  return guarded([&] { *out = dup_string(group->impl.str(group->impl.parse(word))); });
}

gring_status gring_mul(const gring_group* group, const char* a, const char* b, char** out) {
  if (gring_status s = require(group && a && b && out, "gring_mul: null argument")) return s;
  return guarded([&] {
    *out = dup_string(group->impl.str(group->impl.mul(group->impl.parse(a), group->impl.parse(b))));
  });
}

gring_status gring_inv(const gring_group* group, const char* a, char** out) {
  if (gring_status s = require(group && a && out, "gring_inv: null argument")) return s;
  return guarded([&] { *out = dup_string(group->impl.str(group->impl.inv(group->impl.parse(a)))); });
}

gring_status gring_word_length(const gring_group* group, const char* word, long* out) {
  if (gring_status s = require(group && word && out, "gring_word_length: null argument")) return s;
  return guarded([&] { *out = group->impl.word_length(group->impl.parse(word)); });
}

gring_status gring_element_order(const gring_group* group, const char* word, int bound,
                                 int* out) {
  if (gring_status s = require(group && word && out, "gring_element_order: null argument"))
    return s;
  return guarded([&] {
    OrderResult r = group->impl.element_order(group->impl.parse(word), bound);
    *out = r.finite ? r.order : 0;
  });
}

gring_status gring_enumerate_ball(const gring_group* group, int radius, long* out_size) {
  if (gring_status s = require(group && out_size, "gring_enumerate_ball: null argument"))
    return s;
  return guarded(
      [&] { *out_size = static_cast<long>(group->impl.enumerate_ball(radius).size()); });
}

gring_status gring_ball_json(const gring_group* group, int radius, char** out_json) {
  if (gring_status s = require(group && out_json, "gring_ball_json: null argument")) return s;
  return guarded([&] { *out_json = dup_string(ball_report(group->impl, radius).dump(2)); });
}

gring_status gring_conjugacy_json(const gring_group* group, int radius, int closure_radius,
                                  char** out_json) {
  if (gring_status s = require(group && out_json, "gring_conjugacy_json: null argument"))
    return s;
  return guarded([&] {
    *out_json = dup_string(conjugacy_report(group->impl, radius, closure_radius).dump(2));
  });
}

/* ------------------------------------------------------------------ rings */

gring_status gring_ring_parse(const gring_group* group, const char* json, gring_ring** out) {
  if (gring_status s = require(group && json && out, "gring_ring_parse: null argument")) return s;
  return guarded([&] {
    Json j = Json::parse(json, nullptr, true);
    *out = new gring_ring{group, ring_from_json(group->impl, j)};
  });
}

gring_status gring_ring_basis(const gring_group* group, const char* word, gring_ring** out) {
  if (gring_status s = require(group && word && out, "gring_ring_basis: null argument")) return s;
  return guarded(
      [&] { *out = new gring_ring{group, RingElement::basis(group->impl.parse(word))}; });
}

void gring_ring_destroy(gring_ring* elem) { delete elem; }

gring_status gring_ring_json(const gring_ring* elem, char** out_json) {
  if (gring_status s = require(elem && out_json, "gring_ring_json: null argument")) return s;
  return guarded([&] { *out_json = dup_string(ring_json(elem->owner->impl, elem->impl).dump(2)); });
}

gring_status gring_ring_add(const gring_ring* a, const gring_ring* b, gring_ring** out) {
  if (gring_status s = require(a && b && out, "gring_ring_add: null argument")) return s;
  return guarded([&] { *out = new gring_ring{a->owner, a->impl + b->impl}; });
}

gring_status gring_ring_convolve(const gring_ring* a, const gring_ring* b, gring_ring** out) {
  if (gring_status s = require(a && b && out, "gring_ring_convolve: null argument")) return s;
  return guarded(
      [&] { *out = new gring_ring{a->owner, convolve(a->owner->impl, a->impl, b->impl)}; });
}

gring_status gring_ring_norm(const gring_ring* elem, const char* norm_spec, double* out) {
  if (gring_status s = require(elem && norm_spec && out, "gring_ring_norm: null argument"))
    return s;
  return guarded(
      [&] { *out = norm(elem->owner->impl, elem->impl, NormSpec::parse(norm_spec)); });
}

gring_status gring_subordination_json(const gring_group* group, const char* norm_spec,
                                      int probe_radius, char** out_json, int* out_subordinate) {
  if (gring_status s =
          require(group && norm_spec && out_json, "gring_subordination_json: null argument"))
    return s;
  return guarded([&] {
    SubordinationReport r =
        check_subordination(group->impl, NormSpec::parse(norm_spec), probe_radius);
    *out_json = dup_string(norms_report(group->impl, r).dump(2));
    if (out_subordinate) *out_subordinate = r.subordinate ? 1 : 0;
  });
}

/* ------------------------------------------------------------- characters */

gring_status gring_character_create(const gring_group* group, const char* spec,
                                    gring_character** out) {
  if (gring_status s = require(group && spec && out, "gring_character_create: null argument"))
    return s;
  return guarded(
      [&] { *out = new gring_character{group, parse_character_spec(group->impl, spec)}; });
}

void gring_character_destroy(gring_character* chi) { delete chi; }

gring_status gring_character_eval(const gring_character* chi, const char* u, const char* v,
                                  double* out_re, double* out_im) {
  if (gring_status s =
          require(chi && u && v && out_re && out_im, "gring_character_eval: null argument"))
    return s;
  return guarded([&] {
    const Group& G = chi->owner->impl;
    Complex value = chi->impl.evaluate(G, Morphism{G.parse(u), G.parse(v)});
    *out_re = value.real();
    *out_im = value.imag();
  });
}

gring_status gring_additivity_json(const gring_character* chi, int radius, double tol,
                                   char** out_json, int* out_ok) {
  if (gring_status s = require(chi && out_json, "gring_additivity_json: null argument")) return s;
  return guarded([&] {
    AdditivityResult r = check_additivity(chi->owner->impl, chi->impl, radius, tol);
    *out_json = dup_string(additivity_json(chi->owner->impl, r).dump(2));
    if (out_ok) *out_ok = r.ok ? 1 : 0;
  });
}

gring_status gring_loop_trivial_json(const gring_character* chi, int radius, double tol,
                                     char** out_json, int* out_quasi_inner) {
  if (gring_status s = require(chi && out_json, "gring_loop_trivial_json: null argument"))
    return s;
  return guarded([&] {
    LoopTrivialityResult r = is_loop_trivial(chi->owner->impl, chi->impl, radius, tol);
    *out_json = dup_string(loop_triviality_json(chi->owner->impl, r).dump(2));
    if (out_quasi_inner) *out_quasi_inner = r.quasi_inner ? 1 : 0;
  });
}

gring_status gring_hom_constancy_json(const gring_character* chi, int radius, double tol,
                                      char** out_json) {
  if (gring_status s = require(chi && out_json, "gring_hom_constancy_json: null argument"))
    return s;
  return guarded([&] {
    HomConstancyResult r = check_hom_constancy(chi->owner->impl, chi->impl, radius, tol);
    *out_json = dup_string(hom_constancy_json(chi->owner->impl, r).dump(2));
  });
}

gring_status gring_witness_json(const gring_character* chi, int radius, int count, double tol,
                                int order_bound, char** out_json, int* out_found) {
  if (gring_status s = require(chi && out_json, "gring_witness_json: null argument")) return s;
  return guarded([&] {
    WitnessReport r =
        unboundedness_witness(chi->owner->impl, chi->impl, radius, count, tol, order_bound);
    *out_json = dup_string(witness_report(chi->owner->impl, r).dump(2));
    if (out_found) *out_found = r.verdict == WitnessReport::Verdict::WitnessFound ? 1 : 0;
  });
}

gring_status gring_audit_json(const gring_character* chi, int radius, double tol, int order_bound,
                              char** out_json, int* out_consistent) {
  if (gring_status s = require(chi && out_json, "gring_audit_json: null argument")) return s;
  return guarded([&] {
    LoopAuditResult r =
        finite_order_loop_audit(chi->owner->impl, chi->impl, radius, tol, order_bound);
    Json j = audit_json(chi->owner->impl, r);
    Json wrapped = Json::object();
    wrapped["schema"] = kSchemaVersion;
    wrapped["kind"] = "finite-order-audit";
    wrapped["group"] = chi->owner->impl.spec_str();
    for (auto& [key, value] : j.items()) wrapped[key] = std::move(value);
    *out_json = dup_string(wrapped.dump(2));
    if (out_consistent) *out_consistent = r.consistent ? 1 : 0;
  });
}

/* ------------------------------------------------------------ derivations */

gring_status gring_derivation_create(const gring_group* group, const char* spec,
                                     int domain_radius, int trunc_radius,
                                     gring_derivation** out) {
  if (gring_status s = require(group && spec && out, "gring_derivation_create: null argument"))
    return s;
  return guarded([&] {
    *out = new gring_derivation{
        group, parse_derivation_spec(group->impl, spec, domain_radius, trunc_radius)};
  });
}

void gring_derivation_destroy(gring_derivation* d) { delete d; }

gring_status gring_derivation_json(const gring_derivation* d, char** out_json) {
  if (gring_status s = require(d && out_json, "gring_derivation_json: null argument")) return s;
  return guarded(
      [&] { *out_json = dup_string(derivation_json(d->owner->impl, d->impl).dump(2)); });
}

gring_status gring_derivation_apply(const gring_derivation* d, const gring_ring* w,
                                    gring_ring** out) {
  if (gring_status s = require(d && w && out, "gring_derivation_apply: null argument")) return s;
  return guarded(
      [&] { *out = new gring_ring{d->owner, apply(d->owner->impl, d->impl, w->impl)}; });
}

gring_status gring_leibniz_json(const gring_derivation* d, int radius, int window, double tol,
                                char** out_json, int* out_ok) {
  if (gring_status s = require(d && out_json, "gring_leibniz_json: null argument")) return s;
  return guarded([&] {
    std::optional<int> w;
    if (window >= 0) w = window;
    LeibnizScanResult r = leibniz_scan(d->owner->impl, d->impl, radius, w);
    *out_json = dup_string(leibniz_report(d->owner->impl, d->impl, r).dump(2));
    if (out_ok) *out_ok = r.max_defect <= tol ? 1 : 0;
  });
}

gring_status gring_probe_json(const gring_derivation* d, double alpha, int max_radius,
                              double theta, char** out_json, int* out_stabilizing) {
  if (gring_status s = require(d && out_json, "gring_probe_json: null argument")) return s;
  return guarded([&] {
    std::vector<int> radii;
    for (int r = 1; r <= max_radius; ++r) radii.push_back(r);
    ProbeReport r = exp_norm_boundedness_probe(d->owner->impl, d->impl, alpha, radii, theta);
    *out_json = dup_string(probe_report(d->owner->impl, r).dump(2));
    if (out_stabilizing)
      *out_stabilizing = r.verdict == ProbeReport::Verdict::Stabilizing ? 1 : 0;
  });
}

gring_status gring_classify_json(const gring_derivation* d, const char* norm_spec, int radius,
                                 double tol, int witness_count, int order_bound, char** out_json,
                                 int* out_obstructed) {
  if (gring_status s = require(d && norm_spec && out_json, "gring_classify_json: null argument"))
    return s;
  return guarded([&] {
    ClassificationReport r = classify(d->owner->impl, d->impl, NormSpec::parse(norm_spec), radius,
                                      tol, witness_count, order_bound);
    *out_json = dup_string(classification_report(d->owner->impl, r).dump(2));
    if (out_obstructed) {
      bool witness_found =
          r.witness && r.witness->verdict == WitnessReport::Verdict::WitnessFound;
      *out_obstructed = (r.verdict == "loop-obstructed" || witness_found) ? 1 : 0;
    }
  });
}

} /* extern "C" */
