#include "derivation.hpp"

#include <cmath>

namespace gring {
namespace {

const RingElement kZeroElement{};

/// Shared tail of the defect computations.  `reach` is the largest word
/// length that the compared tables can already be wrong at, so the defect is
/// only meaningful on coefficients of length <= trunc_radius - reach.
DefectResult finish_defect(const Group& G, const Derivation& d, const RingElement& diff,
                           std::optional<int> window, int reach) {
  DefectResult result;
  result.window = window;
  if (d.exact()) {
    result.defect = windowed_sup_norm(G, diff, window);
    result.sound = true;
    return result;
  }
  int sound_window = *d.trunc_radius() - reach;
  result.sound_window = sound_window;
  if (!window) {
    if (sound_window < 0) {
      result.defect = 0.0;
      result.sound = false;
      result.note = "no sound window for this pair: truncation radius " +
                    std::to_string(*d.trunc_radius()) + " is smaller than the pair's reach " +
                    std::to_string(reach) + "; nothing was compared";
      return result;
    }
    result.window = sound_window;
    result.defect = windowed_sup_norm(G, diff, sound_window);
    result.sound = true;
    return result;
  }
  result.defect = windowed_sup_norm(G, diff, *window);
  result.sound = *window <= sound_window;
  if (!result.sound)
    result.note = "advisory only: window " + std::to_string(*window) +
                  " exceeds the sound bound " + std::to_string(sound_window) +
                  " for this pair, so truncation artefacts may contribute";
  return result;
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Inner: return "inner";
    case Provenance::Central: return "central";
    case Provenance::Potential: return "potential";
    case Provenance::FromCharacter: return "from-character";
    case Provenance::SigmaTauInner: return "sigma-tau-inner";
    case Provenance::Custom: return "custom";
  }
  throw Error("unreachable provenance");
}

Derivation Derivation::custom(const Group& G, std::map<GroupElement, RingElement> basis,
                              int domain_radius, std::optional<int> trunc_radius,
                              Provenance provenance,
                              std::optional<std::pair<EndomorphismSpec, EndomorphismSpec>> twists) {
  if (domain_radius < 0) throw DomainError("derivation domain radius must be non-negative");
  if (trunc_radius && *trunc_radius < 0)
    throw DomainError("derivation truncation radius must be non-negative");
  Ball ball = G.enumerate_ball(domain_radius);
  Derivation d;
  d.domain_radius_ = domain_radius;
  d.trunc_radius_ = trunc_radius;
  d.provenance_ = provenance;
  d.twists_ = std::move(twists);
  d.domain_ = ball.lengths;
  for (auto& [g, val] : basis) {
    G.check_element(g);
    if (val.zero()) continue;
    if (!ball.contains(g))
      throw DomainError("derivation table entry at " + G.str(g) +
                        " lies outside the domain ball of radius " +
                        std::to_string(domain_radius));
    if (G.is_identity(g))
      throw DomainError("derivation table must vanish at the identity (d(e) = 0 is forced by "
                        "the Leibniz rule)");
    d.basis_.emplace(g, std::move(val));
  }
  return d;
}

const RingElement& Derivation::value(const Group& G, const GroupElement& g) const {
  G.check_element(g);
  auto it = basis_.find(g);
  if (it != basis_.end()) return it->second;
  if (domain_.count(g) != 0) return kZeroElement;
  throw OutOfRangeError("derivation is only tabulated on the ball of radius " +
                        std::to_string(domain_radius_) + " but was queried at " + G.str(g));
}

Derivation inner_derivation(const Group& G, const RingElement& a, int domain_radius,
                            bool flipped) {
  Ball ball = G.enumerate_ball(domain_radius);
  std::map<GroupElement, RingElement> basis;
  for (const GroupElement& g : ball.elements) {
    RingElement delta = RingElement::basis(g);
    RingElement val = convolve(G, delta, a) - convolve(G, a, delta);
    if (flipped) val.scale(Complex{-1.0, 0.0});
    if (!val.zero()) basis.emplace(g, std::move(val));
  }
  return Derivation::custom(G, std::move(basis), domain_radius, std::nullopt, Provenance::Inner);
}

Derivation central_derivation(const Group& G, const GroupElement& z, const Homomorphism& t,
                              int domain_radius) {
  // Reuse the central-character validation of z.
  Character::central(G, z, t);
  Ball ball = G.enumerate_ball(domain_radius);
  std::map<GroupElement, RingElement> basis;
  for (const GroupElement& g : ball.elements) {
    Complex c = t(G, g);
    if (std::abs(c) <= kCoeffEpsilon) continue;
    RingElement val;
    val.add_term(G.mul(g, z), c);
    basis.emplace(g, std::move(val));
  }
  return Derivation::custom(G, std::move(basis), domain_radius, std::nullopt,
                            Provenance::Central);
}

Derivation derivation_from_character(const Group& G, const Character& chi, int domain_radius,
                                     int trunc_radius) {
  if (trunc_radius < 0) throw DomainError("truncation radius must be non-negative");
  Ball domain = G.enumerate_ball(domain_radius);
  Ball window = G.enumerate_ball(trunc_radius);
  std::map<GroupElement, RingElement> basis;
  for (const GroupElement& g : domain.elements) {
    RingElement val;
    for (const GroupElement& t : window.elements) {
      GroupElement gt = G.mul(g, t);
      val.add_term(gt, chi.evaluate(G, Morphism{gt, g}));
    }
    if (!val.zero()) basis.emplace(g, std::move(val));
  }
  return Derivation::custom(G, std::move(basis), domain_radius, trunc_radius,
                            Provenance::FromCharacter);
}

Derivation potential_derivation(const Group& G, const std::map<GroupElement, Complex>& f,
                                int domain_radius, int trunc_radius,
                                std::optional<int> f_radius) {
  Character chi = Character::potential(f, f_radius);
  Derivation base = derivation_from_character(G, chi, domain_radius, trunc_radius);
  return Derivation::custom(G, base.basis(), domain_radius, trunc_radius,
                            Provenance::Potential);
}

Derivation sigma_tau_inner_derivation(const Group& G, const RingElement& a,
                                      const EndomorphismSpec& sigma, const EndomorphismSpec& tau,
                                      int domain_radius) {
  Ball ball = G.enumerate_ball(domain_radius);
  std::map<GroupElement, RingElement> basis;
  for (const GroupElement& g : ball.elements) {
    RingElement sg = RingElement::basis(sigma.apply(G, g));
    RingElement tg = RingElement::basis(tau.apply(G, g));
    RingElement val = convolve(G, a, sg) - convolve(G, tg, a);
    if (!val.zero()) basis.emplace(g, std::move(val));
  }
  return Derivation::custom(G, std::move(basis), domain_radius, std::nullopt,
                            Provenance::SigmaTauInner, std::make_pair(sigma, tau));
}

RingElement apply(const Group& G, const Derivation& d, const RingElement& w) {
  RingElement out;
  for (const auto& [g, c] : w.terms()) {
    RingElement term = d.value(G, g);
    term.scale(c);
    out += term;
  }
  return out;
}

Character character_of_derivation(const Group&, const Derivation& d) {
  TabulatedCharacter table;
  table.v_radius = d.domain_radius();
  table.source_radius = d.trunc_radius();
  for (const auto& [v, dv] : d.basis())
    for (const auto& [u, c] : dv.terms()) table.table.emplace(Morphism{u, v}, c);
  return Character::tabulated(std::move(table));
}

DefectResult leibniz_defect(const Group& G, const Derivation& d, const GroupElement& u,
                            const GroupElement& v, std::optional<int> window) {
  G.check_element(u);
  G.check_element(v);
  GroupElement uv = G.mul(u, v);
  RingElement lhs = d.value(G, uv);
  RingElement rhs = convolve(G, d.value(G, u), RingElement::basis(v)) +
                    convolve(G, RingElement::basis(u), d.value(G, v));
  int reach = G.word_length(u) + G.word_length(v);
  return finish_defect(G, d, lhs - rhs, window, reach);
}

DefectResult twisted_leibniz_defect(const Group& G, const Derivation& d,
                                    const EndomorphismSpec& sigma, const EndomorphismSpec& tau,
                                    const GroupElement& u, const GroupElement& v,
                                    std::optional<int> window) {
  G.check_element(u);
  G.check_element(v);
  GroupElement uv = G.mul(u, v);
  GroupElement sv = sigma.apply(G, v);
  GroupElement tu = tau.apply(G, u);
  RingElement lhs = d.value(G, uv);
  RingElement rhs = convolve(G, d.value(G, u), RingElement::basis(sv)) +
                    convolve(G, RingElement::basis(tu), d.value(G, v));
  int reach = std::max({G.word_length(uv), G.word_length(u) + G.word_length(sv),
                        G.word_length(tu) + G.word_length(v)});
  return finish_defect(G, d, lhs - rhs, window, reach);
}

LeibnizScanResult leibniz_scan(const Group& G, const Derivation& d, int radius,
                               std::optional<int> window) {
  Ball ball = G.enumerate_ball(radius);
  LeibnizScanResult result;
  result.window = window;
  for (const GroupElement& u : ball.elements)
    for (const GroupElement& v : ball.elements) {
      DefectResult res;
      try {
        if (d.twists())
          res = twisted_leibniz_defect(G, d, d.twists()->first, d.twists()->second, u, v, window);
        else
          res = leibniz_defect(G, d, u, v, window);
      } catch (const OutOfRangeError&) {
        ++result.pairs_skipped;
        continue;
      }
      if (!window && !d.exact() && !res.sound) {
        // auto-window mode could not compare anything for this pair
        ++result.pairs_skipped;
        continue;
      }
      ++result.pairs_checked;
      result.all_sound = result.all_sound && res.sound;
      if (!result.worst_pair || res.defect > result.max_defect) {
        result.max_defect = res.defect;
        result.worst_pair = std::make_pair(u, v);
      }
    }
  return result;
}

}  // namespace gring
