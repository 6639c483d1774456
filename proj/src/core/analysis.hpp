#pragma once

#include "derivation.hpp"

namespace gring {

/// Empirical lower bound for the operator norm of d from sup-normalised test
/// elements: max over the family of norm(d(w), spec) / sup_norm(w).
struct NormLowerBoundResult {
  NormSpec spec;
  double value = 0.0;
  std::optional<RingElement> achiever;
  std::string achiever_text;
  long evaluated = 0;
  long skipped = 0;  ///< family members leaving the derivation's domain
};

NormLowerBoundResult operator_norm_lower_bound(const Group& G, const Derivation& d,
                                               const NormSpec& spec,
                                               const std::vector<RingElement>& family);

/// The basis elements delta_g, g in Ball(radius), in ball order.
std::vector<RingElement> basis_family(const Group& G, int radius);
/// delta_{g^n} for n = 1..count.
std::vector<RingElement> power_family(const Group& G, const GroupElement& g, int count);

/// One row of the witness growth table: the n-th power of the witness loop.
struct WitnessRow {
  int n = 0;
  double chi_power = 0.0;             ///< |chi(phi^n)|
  bool direct = true;                 ///< measured, not extrapolated by additivity
  double sup_tn = 1.0;                ///< sup norm of delta_{t^n}
  std::optional<double> sup_d_tn;     ///< sup norm of d(delta_{t^n}) when in domain
  double ratio = 0.0;                 ///< chi_power / sup_tn
};

/// Search for an unboundedness witness: a loop (g t, t) with chi(loop) != 0
/// and conjugator order exceeding the bound.  Its powers then carry
/// |chi(phi^n)| = n |chi(phi)| against sup norm 1, so no norm dominated by
/// sup can bound the derivation realising chi.
struct WitnessReport {
  enum class Verdict { WitnessFound, NoneFound, PreconditionFailed };
  Verdict verdict = Verdict::NoneFound;
  int radius = 0;
  int count = 0;
  int order_bound = 0;
  double tol = 0.0;
  AdditivityResult additivity;
  long loops_scanned = 0;
  long finite_order_nonzero = 0;  ///< nonzero loops skipped for having finite order
  std::optional<Loop> loop;
  Complex loop_value{};
  std::vector<WitnessRow> rows;
  std::string note;
};

WitnessReport unboundedness_witness(const Group& G, const Character& chi, int radius, int count,
                                    double tol, int order_bound = kDefaultOrderBound,
                                    const Derivation* d = nullptr);

/// Finite-order forcing: for an additive character, a loop whose conjugator
/// has finite order m satisfies m * chi(loop) = chi(loop^m) = 0, so the value
/// must vanish.  The audit scans all loops with proven finite order and
/// reports the first nonzero value as a contradiction.
struct LoopAuditResult {
  bool consistent = true;
  AdditivityResult additivity;
  long finite_loops_checked = 0;
  long unproven_skipped = 0;  ///< loops whose conjugator order exceeds the bound
  struct Contradiction {
    Loop loop;
    int order = 0;
    Complex value{};
  };
  std::optional<Contradiction> contradiction;
};

LoopAuditResult finite_order_loop_audit(const Group& G, const Character& chi, int radius,
                                        double tol, int order_bound = kDefaultOrderBound);

/// One row of the exp-weight growth probe.
struct ProbeRow {
  int radius = 0;
  double value = 0.0;      ///< expw norm of d(indicator of Ball(radius))
  double increment = 0.0;  ///< value - previous value
  std::optional<double> ratio;  ///< increment / previous increment
};

/// Growth probe for || d(1_{Ball(n)}) ||_{expw:alpha} over increasing radii.
/// Verdict is "stabilizing" when the final three increment ratios fall below
/// theta (< 1); at least four rows are needed for a verdict.
struct ProbeReport {
  double alpha = 0.0;
  double theta = 0.0;
  enum class Verdict { Stabilizing, NotStabilizing, InsufficientData };
  Verdict verdict = Verdict::InsufficientData;
  std::vector<ProbeRow> rows;
  bool partial = false;  ///< stopped early at the derivation's domain boundary
  std::string note;
};

ProbeReport exp_norm_boundedness_probe(const Group& G, const Derivation& d, double alpha,
                                       const std::vector<int>& radii, double theta = 0.9);

/// A sub-analysis that failed; recorded instead of aborting the report.
struct StageError {
  std::string stage;
  std::string message;
};

/// Aggregated classification of a derivation against an ambient norm:
/// additivity of its character, quasi-innerness (loop triviality),
/// hom-constancy, norm subordination, witness search, growth probe, and
/// empirical operator-norm lower bounds, plus a cross-check that the
/// combination "subordinate + bounded + loop-obstructed" never occurs.
struct ClassificationReport {
  std::string group;
  std::string derivation_provenance;
  bool derivation_exact = true;
  int domain_radius = 0;
  std::optional<int> trunc_radius;
  NormSpec ambient;
  int radius = 0;
  double tol = 0.0;
  int witness_count = 0;
  int order_bound = 0;
  std::string chi_description;

  std::optional<AdditivityResult> additivity;
  std::optional<LoopTrivialityResult> loop_triviality;
  std::optional<HomConstancyResult> hom_constancy;
  std::optional<LoopAuditResult> audit;
  std::optional<SubordinationReport> subordination;
  std::optional<WitnessReport> witness;
  std::optional<ProbeReport> probe;  ///< only when the ambient norm is expw
  std::optional<NormLowerBoundResult> lower_bound;
  std::vector<double> lower_bound_by_radius;  ///< radii 0..min(radius, domain)

  bool boundedness_plateau = false;
  bool bounded_verified = false;  ///< no witness found and the lower bounds plateau
  bool theorem_consistent = true;
  std::string verdict;  ///< quasi-inner | loop-obstructed | not-additive | indeterminate
  std::vector<StageError> errors;
};

ClassificationReport classify(const Group& G, const Derivation& d, const NormSpec& ambient,
                              int radius, double tol = 1e-9, int witness_count = 16,
                              int order_bound = kDefaultOrderBound);

}  // namespace gring
