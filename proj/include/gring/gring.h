/* gring: group-ring derivation analysis over concrete finitely generated
 * groups, exposed as a plain C interface over opaque handles.
 *
 * Conventions:
 *  - every fallible call returns gring_status; GRING_OK is 0,
 *  - on failure, gring_last_error() returns a thread-local message,
 *  - strings produced by the library (char** out parameters) are owned by the
 *    caller and must be released with gring_string_free(),
 *  - handles are destroyed with their matching *_destroy function; handles
 *    derived from a group (rings, characters, derivations) must not outlive
 *    the group they were created from.
 */
#ifndef GRING_H
#define GRING_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gring_group gring_group;
typedef struct gring_ring gring_ring;
typedef struct gring_character gring_character;
typedef struct gring_derivation gring_derivation;

typedef enum gring_status {
  GRING_OK = 0,
  GRING_ERR_INVALID_ARG = 1,  /* null pointers, malformed parameters */
  GRING_ERR_PARSE = 2,        /* bad spec strings, words or JSON */
  GRING_ERR_DOMAIN = 3,       /* structurally invalid inputs */
  GRING_ERR_OUT_OF_RANGE = 4, /* query outside an enumerated or declared domain */
  GRING_ERR_RESOURCE = 5,     /* enumeration budget exceeded */
  GRING_ERR_COMPOSE = 6,      /* non-composable morphisms */
  GRING_ERR_NOMEM = 7,
  GRING_ERR_INTERNAL = 8
} gring_status;

const char* gring_version(void);
const char* gring_status_name(gring_status status);
/* Thread-local message describing the most recent failure in this thread. */
const char* gring_last_error(void);
void gring_string_free(char* s);

/* -------------------------------------------------------------------------
 * Groups.  Spec strings: "free:2", "abelian:3", "heisenberg", "cyclic:6",
 * "dihedral:4", "symmetric:3".
 */
gring_status gring_group_create(const char* spec, gring_group** out);
void gring_group_destroy(gring_group* group);
gring_status gring_group_spec(const gring_group* group, char** out);

/* Words use '*'-separated generator powers, e.g. "x*y^-1*x^2", with "e" the
 * identity.  gring_normalize returns the canonical word. */
gring_status gring_normalize(const gring_group* group, const char* word, char** out);
gring_status gring_mul(const gring_group* group, const char* a, const char* b, char** out);
gring_status gring_inv(const gring_group* group, const char* a, char** out);
/* Word length over the symmetric generating set; for the heisenberg backend
 * the element must be covered by a previously enumerated ball. */
gring_status gring_word_length(const gring_group* group, const char* word, long* out);
/* Least order <= bound, or 0 when it exceeds the bound (not proven finite). */
gring_status gring_element_order(const gring_group* group, const char* word, int bound,
                                 int* out);
/* Grows the ball cache and reports the ball size. */
gring_status gring_enumerate_ball(const gring_group* group, int radius, long* out_size);
gring_status gring_ball_json(const gring_group* group, int radius, char** out_json);
gring_status gring_conjugacy_json(const gring_group* group, int radius, int closure_radius,
                                  char** out_json);

/* -------------------------------------------------------------------------
 * Ring elements: finitely supported complex coefficient maps.
 * JSON shape: {"terms": [{"g": "<word>", "re": 1.0, "im": 0.0}, ...]}.
 */
gring_status gring_ring_parse(const gring_group* group, const char* json, gring_ring** out);
gring_status gring_ring_basis(const gring_group* group, const char* word, gring_ring** out);
void gring_ring_destroy(gring_ring* elem);
gring_status gring_ring_json(const gring_ring* elem, char** out_json);
gring_status gring_ring_add(const gring_ring* a, const gring_ring* b, gring_ring** out);
gring_status gring_ring_convolve(const gring_ring* a, const gring_ring* b, gring_ring** out);
/* Norm specs: "sup", "lp:2", "expw:1.5". */
gring_status gring_ring_norm(const gring_ring* elem, const char* norm_spec, double* out);
/* Subordination verdict for the norm against sup, probed on Ball(radius);
 * out_subordinate is 1/0. */
gring_status gring_subordination_json(const gring_group* group, const char* norm_spec,
                                      int probe_radius, char** out_json, int* out_subordinate);

/* -------------------------------------------------------------------------
 * Characters of the adjoint-action groupoid.  Spec strings:
 *   "inner:<word-or-@file>", "potential:@file.json",
 *   "central:<z>,<gen=value,...>", "tabulated:@file.json".
 */
gring_status gring_character_create(const gring_group* group, const char* spec,
                                    gring_character** out);
void gring_character_destroy(gring_character* chi);
/* Evaluate on the morphism (u, v). */
gring_status gring_character_eval(const gring_character* chi, const char* u, const char* v,
                                  double* out_re, double* out_im);
gring_status gring_additivity_json(const gring_character* chi, int radius, double tol,
                                   char** out_json, int* out_ok);
gring_status gring_loop_trivial_json(const gring_character* chi, int radius, double tol,
                                     char** out_json, int* out_quasi_inner);
gring_status gring_hom_constancy_json(const gring_character* chi, int radius, double tol,
                                      char** out_json);
/* Unboundedness witness search; out_found is 1 when a witness loop exists. */
gring_status gring_witness_json(const gring_character* chi, int radius, int count, double tol,
                                int order_bound, char** out_json, int* out_found);
gring_status gring_audit_json(const gring_character* chi, int radius, double tol,
                              int order_bound, char** out_json, int* out_consistent);

/* -------------------------------------------------------------------------
 * Derivations.  Spec strings:
 *   "inner:<word-or-@file>", "central:<z>;<gen=value,...>",
 *   "potential:@file.json", "fromchar:<character-spec>",
 *   "stinner:<a>;<sigma>;<tau>", or "@file.json" for a serialized table.
 * Endomorphism specs: "id" or "x->x^2,y->y".
 */
gring_status gring_derivation_create(const gring_group* group, const char* spec,
                                     int domain_radius, int trunc_radius,
                                     gring_derivation** out);
void gring_derivation_destroy(gring_derivation* d);
gring_status gring_derivation_json(const gring_derivation* d, char** out_json);
gring_status gring_derivation_apply(const gring_derivation* d, const gring_ring* w,
                                    gring_ring** out);
/* Leibniz (or twisted Leibniz, when the derivation carries twists) defect
 * scan over Ball(radius); window < 0 means per-pair sound windows.
 * out_ok is 1 when max_defect <= tol over the checked pairs. */
gring_status gring_leibniz_json(const gring_derivation* d, int radius, int window, double tol,
                                char** out_json, int* out_ok);
/* Growth probe of ||d(1_Ball(n))||_{expw:alpha} for n = 1..max_radius. */
gring_status gring_probe_json(const gring_derivation* d, double alpha, int max_radius,
                              double theta, char** out_json, int* out_stabilizing);
/* Full classification against an ambient norm; out_obstructed is 1 when the
 * verdict is loop-obstructed or a witness was found. */
gring_status gring_classify_json(const gring_derivation* d, const char* norm_spec, int radius,
                                 double tol, int witness_count, int order_bound, char** out_json,
                                 int* out_obstructed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRING_H */
