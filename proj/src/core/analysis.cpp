#include "analysis.hpp"

#include <cmath>
#include <limits>

namespace gring {
namespace {

/// Evaluate a norm, growing the word-length cache geometrically when a
/// table-based group has not yet enumerated far enough for the exp-weight
/// kind.  Gives up to the budget guard rather than looping forever.
double robust_norm(const Group& G, const RingElement& w, const NormSpec& spec) {
  int grow = 4;
  for (;;) {
    try {
      return norm(G, w, spec);
    } catch (const OutOfRangeError&) {
      if (grow > 4096) throw;
      G.enumerate_ball(grow);  // may throw ResourceError, which is final
      grow *= 2;
    }
  }
}

}  // namespace

std::vector<RingElement> basis_family(const Group& G, int radius) {
  std::vector<RingElement> out;
  for (const GroupElement& g : G.enumerate_ball(radius).elements)
    out.push_back(RingElement::basis(g));
  return out;
}

std::vector<RingElement> power_family(const Group& G, const GroupElement& g, int count) {
  std::vector<RingElement> out;
  for (int n = 1; n <= count; ++n) out.push_back(RingElement::basis(G.pow(g, n)));
  return out;
}

NormLowerBoundResult operator_norm_lower_bound(const Group& G, const Derivation& d,
                                               const NormSpec& spec,
                                               const std::vector<RingElement>& family) {
  NormLowerBoundResult result;
  result.spec = spec;
  for (const RingElement& w : family) {
    double denom = sup_norm(w);
    if (denom <= 0.0) continue;
    double value;
    try {
      value = robust_norm(G, apply(G, d, w), spec) / denom;
    } catch (const OutOfRangeError&) {
      ++result.skipped;
      continue;
    }
    ++result.evaluated;
    if (!result.achiever || value > result.value) {
      result.value = value;
      result.achiever = w;
      result.achiever_text = to_string(G, w);
    }
  }
  return result;
}

WitnessReport unboundedness_witness(const Group& G, const Character& chi, int radius, int count,
                                    double tol, int order_bound, const Derivation* d) {
  if (count < 1) throw DomainError("witness power count must be at least 1");
  WitnessReport report;
  report.radius = radius;
  report.count = count;
  report.order_bound = order_bound;
  report.tol = tol;

  report.additivity = check_additivity(G, chi, radius, tol);
  if (!report.additivity.ok) {
    report.verdict = WitnessReport::Verdict::PreconditionFailed;
    report.note = "character is not additive on the test ball, so loop powers certify nothing";
    return report;
  }

  std::vector<Loop> loops = enumerate_loops(G, radius, order_bound);
  report.loops_scanned = static_cast<long>(loops.size());
  for (const Loop& loop : loops) {
    Complex value = chi.evaluate(G, loop.phi);
    if (std::abs(value) <= tol) continue;
    if (loop.conjugator_order.finite) {
      // A nonzero value on a finite-order loop contradicts additivity at
      // larger radius; the finite-order audit reports it.  Not a witness.
      ++report.finite_order_nonzero;
      continue;
    }
    report.loop = loop;
    report.loop_value = value;
    report.verdict = WitnessReport::Verdict::WitnessFound;
    for (int n = 1; n <= count; ++n) {
      WitnessRow row;
      row.n = n;
      Morphism power = loop_power(G, loop.phi, n);
      try {
        row.chi_power = std::abs(chi.evaluate(G, power));
        row.direct = true;
      } catch (const OutOfRangeError&) {
        row.chi_power = static_cast<double>(n) * std::abs(value);
        row.direct = false;
      }
      row.sup_tn = sup_norm(RingElement::basis(power.v));
      row.ratio = row.chi_power / row.sup_tn;
      if (d) {
        try {
          row.sup_d_tn = sup_norm(apply(G, *d, RingElement::basis(power.v)));
        } catch (const OutOfRangeError&) {
          // power leaves the derivation's domain; leave the column empty
        }
      }
      report.rows.push_back(std::move(row));
    }
    return report;
  }
  return report;
}

LoopAuditResult finite_order_loop_audit(const Group& G, const Character& chi, int radius,
                                        double tol, int order_bound) {
  LoopAuditResult result;
  result.additivity = check_additivity(G, chi, radius, tol);
  for (const Loop& loop : enumerate_loops(G, radius, order_bound)) {
    if (!loop.conjugator_order.finite) {
      ++result.unproven_skipped;
      continue;
    }
    Complex value = chi.evaluate(G, loop.phi);
    ++result.finite_loops_checked;
    if (std::abs(value) > tol) {
      result.consistent = false;
      result.contradiction =
          LoopAuditResult::Contradiction{loop, loop.conjugator_order.order, value};
      return result;
    }
  }
  return result;
}

ProbeReport exp_norm_boundedness_probe(const Group& G, const Derivation& d, double alpha,
                                       const std::vector<int>& radii, double theta) {
  if (!(alpha > 0.0)) throw DomainError("probe requires alpha > 0");
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("probe requires 0 < theta < 1");
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (radii[i] < 0 || (i > 0 && radii[i] <= radii[i - 1]))
      throw DomainError("probe radii must be non-negative and strictly increasing");

  ProbeReport report;
  report.alpha = alpha;
  report.theta = theta;
  NormSpec spec = NormSpec::exp_weight(alpha);

  // Values are measured against a zero baseline, so the first row's increment
  // is its value and ratios start with the second row.
  double prev_value = 0.0;
  std::optional<double> prev_increment;
  for (int r : radii) {
    if (r > d.domain_radius()) {
      report.partial = true;
      report.note = "stopped at radius " + std::to_string(r) +
                    ": the derivation is only tabulated to radius " +
                    std::to_string(d.domain_radius());
      break;
    }
    RingElement indicator;
    for (const GroupElement& g : G.enumerate_ball(r).elements)
      indicator.add_term(g, Complex{1.0, 0.0});
    double value;
    try {
      value = robust_norm(G, apply(G, d, indicator), spec);
    } catch (const OutOfRangeError& e) {
      report.partial = true;
      report.note = std::string("stopped at radius ") + std::to_string(r) + ": " + e.what();
      break;
    }
    ProbeRow row;
    row.radius = r;
    row.value = value;
    row.increment = value - prev_value;
    if (prev_increment) {
      if (*prev_increment == 0.0)
        row.ratio = row.increment == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      else
        row.ratio = std::abs(row.increment) / std::abs(*prev_increment);
    }
    prev_increment = row.increment;
    prev_value = value;
    report.rows.push_back(std::move(row));
  }

  std::vector<double> ratios;
  for (const ProbeRow& row : report.rows)
    if (row.ratio) ratios.push_back(*row.ratio);
  if (ratios.size() < 3) {
    report.verdict = ProbeReport::Verdict::InsufficientData;
    if (report.note.empty())
      report.note = "need at least four radii for a verdict; got " +
                    std::to_string(report.rows.size());
  } else {
    bool stabilizing = true;
    for (std::size_t i = ratios.size() - 3; i < ratios.size(); ++i)
      stabilizing = stabilizing && ratios[i] < theta;
    report.verdict = stabilizing ? ProbeReport::Verdict::Stabilizing
                                 : ProbeReport::Verdict::NotStabilizing;
  }
  return report;
}

ClassificationReport classify(const Group& G, const Derivation& d, const NormSpec& ambient,
                              int radius, double tol, int witness_count, int order_bound) {
  if (radius < 0) throw DomainError("classification radius must be non-negative");
  ClassificationReport report;
  report.group = G.spec_str();
  report.derivation_provenance = provenance_name(d.provenance());
  report.derivation_exact = d.exact();
  report.domain_radius = d.domain_radius();
  report.trunc_radius = d.trunc_radius();
  report.ambient = ambient;
  report.radius = radius;
  report.tol = tol;
  report.witness_count = witness_count;
  report.order_bound = order_bound;

  auto run = [&](const std::string& stage, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      report.errors.push_back(StageError{stage, e.what()});
    }
  };

  std::optional<Character> chi;
  run("character", [&] {
    chi = character_of_derivation(G, d);
    report.chi_description = chi->describe(G);
  });

  if (chi) {
    run("additivity", [&] { report.additivity = check_additivity(G, *chi, radius, tol); });
    run("loop-triviality",
        [&] { report.loop_triviality = is_loop_trivial(G, *chi, radius, tol, order_bound); });
    run("hom-constancy",
        [&] { report.hom_constancy = check_hom_constancy(G, *chi, radius, tol); });
    run("finite-order-audit",
        [&] { report.audit = finite_order_loop_audit(G, *chi, radius, tol, order_bound); });
  }

  run("subordination", [&] { report.subordination = check_subordination(G, ambient, radius); });

  bool obstructed_infinite = report.loop_triviality && report.loop_triviality->obstruction &&
                             !report.loop_triviality->obstruction->loop.conjugator_order.finite;
  if (chi && obstructed_infinite)
    run("witness", [&] {
      report.witness =
          unboundedness_witness(G, *chi, radius, witness_count, tol, order_bound, &d);
    });

  if (ambient.kind == NormSpec::Kind::ExpWeight)
    run("probe", [&] {
      std::vector<int> radii;
      for (int r = 1; r <= std::min(radius, d.domain_radius()); ++r) radii.push_back(r);
      if (radii.empty()) throw DomainError("no probe radii available at radius 0");
      report.probe = exp_norm_boundedness_probe(G, d, ambient.alpha, radii);
    });

  run("lower-bound", [&] {
    int r = std::min(radius, d.domain_radius());
    Ball ball = G.enumerate_ball(r);
    NormLowerBoundResult running;
    running.spec = ambient;
    int level = 0;
    for (const GroupElement& g : ball.elements) {
      int len = ball.length_of(g);
      while (level < len) {
        report.lower_bound_by_radius.push_back(running.value);
        ++level;
      }
      RingElement w = RingElement::basis(g);
      double value;
      try {
        value = robust_norm(G, apply(G, d, w), ambient);
      } catch (const OutOfRangeError&) {
        ++running.skipped;
        continue;
      }
      ++running.evaluated;
      if (!running.achiever || value > running.value) {
        running.value = value;
        running.achiever = w;
        running.achiever_text = to_string(G, w);
      }
    }
    while (level <= r) {
      report.lower_bound_by_radius.push_back(running.value);
      ++level;
    }
    report.lower_bound = std::move(running);
  });

  if (report.lower_bound_by_radius.size() >= 2) {
    double last = report.lower_bound_by_radius.back();
    double prev = report.lower_bound_by_radius[report.lower_bound_by_radius.size() - 2];
    report.boundedness_plateau = std::abs(last - prev) <= tol * std::max(1.0, std::abs(last));
  }
  bool witness_found =
      report.witness && report.witness->verdict == WitnessReport::Verdict::WitnessFound;
  report.bounded_verified = !witness_found && report.boundedness_plateau;

  bool subordinate = report.subordination && report.subordination->subordinate;
  bool consistent = true;
  // A norm dominated by sup cannot bound a derivation whose character is
  // obstructed by an infinite-order loop; the two cross-checks below assert
  // the contrapositives this tool can see at desk scale.
  if (subordinate && obstructed_infinite && report.bounded_verified) consistent = false;
  if (subordinate && obstructed_infinite && !witness_found) consistent = false;
  report.theorem_consistent = consistent;

  if (!report.loop_triviality)
    report.verdict = "indeterminate";
  else if (report.additivity && !report.additivity->ok)
    report.verdict = "not-additive";
  else if (report.loop_triviality->quasi_inner)
    report.verdict = "quasi-inner";
  else
    report.verdict = "loop-obstructed";
  return report;
}

}  // namespace gring
