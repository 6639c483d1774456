#include "character.hpp"

#include <cmath>
#include <sstream>

namespace gring {

Character Character::inner(RingElement a, bool flipped) {
  return Character(InnerCharacter{std::move(a), flipped});
}

Character Character::potential(std::map<GroupElement, Complex> f, std::optional<int> f_radius) {
  return Character(PotentialCharacter{std::move(f), f_radius});
}

Character Character::central(const Group& G, GroupElement z, Homomorphism t) {
  G.check_element(z);
  for (std::size_t i = 0; i < G.generator_count(); ++i) {
    GroupElement s = G.generator(i);
    if (G.mul(z, s) != G.mul(s, z))
      throw DomainError("element " + G.str(z) + " is not central in " + G.spec_str() +
                        ": it does not commute with " + G.generator_labels()[i]);
  }
  return Character(CentralCharacter{std::move(z), std::move(t)});
}

Character Character::tabulated(TabulatedCharacter table) {
  if (table.v_radius < 0) throw DomainError("tabulated character needs v_radius >= 0");
  return Character(std::move(table));
}

Complex Character::evaluate(const Group& G, const Morphism& phi) const {
  G.check_element(phi.u);
  G.check_element(phi.v);
  if (const auto* inner = std::get_if<InnerCharacter>(&data_)) {
    Complex value = inner->a.coeff(source(G, phi)) - inner->a.coeff(target(G, phi));
    return inner->flipped ? -value : value;
  }
  if (const auto* pot = std::get_if<PotentialCharacter>(&data_)) {
    auto lookup = [&](const GroupElement& g) {
      if (pot->f_radius && !G.word_length_at_most(g, *pot->f_radius))
        throw OutOfRangeError("potential is only declared on the ball of radius " +
                              std::to_string(*pot->f_radius) + " but was queried at " + G.str(g));
      auto it = pot->f.find(g);
      return it == pot->f.end() ? Complex{} : it->second;
    };
    return lookup(source(G, phi)) - lookup(target(G, phi));
  }
  if (const auto* central = std::get_if<CentralCharacter>(&data_)) {
    if (source(G, phi) != central->z) return Complex{};
    return central->t(G, phi.v);
  }
  const auto& tab = std::get<TabulatedCharacter>(data_);
  if (!G.word_length_at_most(phi.v, tab.v_radius))
    throw OutOfRangeError("tabulated character is only declared for |v| <= " +
                          std::to_string(tab.v_radius) + " but was queried at v = " +
                          G.str(phi.v));
  if (tab.source_radius && !G.word_length_at_most(source(G, phi), *tab.source_radius))
    throw OutOfRangeError("tabulated character is only declared for sources in the ball of "
                          "radius " +
                          std::to_string(*tab.source_radius) + " but was queried at source " +
                          G.str(source(G, phi)));
  auto it = tab.table.find(phi);
  return it == tab.table.end() ? Complex{} : it->second;
}

std::string Character::describe(const Group& G) const {
  std::ostringstream out;
  if (const auto* inner = std::get_if<InnerCharacter>(&data_)) {
    out << "inner(a = " << to_string(G, inner->a) << (inner->flipped ? ", flipped" : "") << ")";
  } else if (const auto* pot = std::get_if<PotentialCharacter>(&data_)) {
    out << "potential(" << pot->f.size() << " support points";
    if (pot->f_radius) out << ", radius " << *pot->f_radius;
    out << ")";
  } else if (const auto* central = std::get_if<CentralCharacter>(&data_)) {
    out << "central(z = " << G.str(central->z) << ", t = " << central->t.str(G) << ")";
  } else {
    const auto& tab = std::get<TabulatedCharacter>(data_);
    out << "tabulated(" << tab.table.size() << " entries, |v| <= " << tab.v_radius;
    if (tab.source_radius) out << ", |source| <= " << *tab.source_radius;
    out << ")";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Additivity / loop triviality / hom constancy

AdditivityResult check_additivity(const Group& G, const Character& chi, int radius, double tol) {
  Ball ball = G.enumerate_ball(radius);
  AdditivityResult result;

  // Morphisms with both components in the ball, bucketed by source object so
  // composable partners are found directly.
  std::vector<Morphism> morphisms;
  morphisms.reserve(ball.size() * ball.size());
  for (const GroupElement& u : ball.elements)
    for (const GroupElement& v : ball.elements) morphisms.push_back(Morphism{u, v});

  std::map<GroupElement, std::vector<std::size_t>> by_source;
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    by_source[source(G, morphisms[i])].push_back(i);

  for (const Morphism& phi : morphisms) {
    auto it = by_source.find(target(G, phi));
    if (it == by_source.end()) continue;
    for (std::size_t j : it->second) {
      const Morphism& psi = morphisms[j];
      Complex lhs, rhs;
      try {
        lhs = chi.evaluate(G, compose(G, psi, phi));
        rhs = chi.evaluate(G, psi) + chi.evaluate(G, phi);
      } catch (const OutOfRangeError&) {
        ++result.pairs_skipped;
        continue;
      }
      ++result.pairs_checked;
      double defect = std::abs(lhs - rhs);
      if (defect > tol) {
        result.ok = false;
        result.violation = AdditivityResult::Violation{psi, phi, lhs, rhs, defect};
        return result;
      }
    }
  }
  return result;
}

LoopTrivialityResult is_loop_trivial(const Group& G, const Character& chi, int radius, double tol,
                                     int order_bound) {
  LoopTrivialityResult result;
  for (const Loop& loop : enumerate_loops(G, radius, order_bound)) {
    Complex value = chi.evaluate(G, loop.phi);
    ++result.loops_checked;
    if (std::abs(value) > tol) {
      result.quasi_inner = false;
      result.obstruction = LoopTrivialityResult::Obstruction{loop, value};
      return result;
    }
  }
  return result;
}

HomConstancyResult check_hom_constancy(const Group& G, const Character& chi, int radius,
                                       double tol) {
  HomConstancyResult result;
  LoopTrivialityResult loops = is_loop_trivial(G, chi, radius, tol);
  if (!loops.quasi_inner) {
    result.status = HomConstancyResult::Status::NotApplicable;
    result.loop_obstruction = loops.obstruction;
    return result;
  }

  Ball ball = G.enumerate_ball(radius);
  std::map<std::pair<GroupElement, GroupElement>, std::pair<Morphism, Complex>> first_seen;
  for (const GroupElement& u : ball.elements)
    for (const GroupElement& v : ball.elements) {
      Morphism phi{u, v};
      Complex value;
      try {
        value = chi.evaluate(G, phi);
      } catch (const OutOfRangeError&) {
        continue;
      }
      ++result.morphisms_checked;
      auto key = std::make_pair(source(G, phi), target(G, phi));
      auto it = first_seen.find(key);
      if (it == first_seen.end()) {
        first_seen.emplace(key, std::make_pair(phi, value));
        continue;
      }
      if (std::abs(value - it->second.second) > tol) {
        result.status = HomConstancyResult::Status::Counterexample;
        result.counterexample = HomConstancyResult::Counterexample{
            it->second.first, phi, it->second.second, value};
        return result;
      }
    }
  result.hom_sets_checked = static_cast<long>(first_seen.size());
  return result;
}

}  // namespace gring
