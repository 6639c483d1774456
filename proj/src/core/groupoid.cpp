#include "groupoid.hpp"

namespace gring {

GroupElement source(const Group& G, const Morphism& phi) {
  return G.mul(G.inv(phi.v), phi.u);
}

GroupElement target(const Group& G, const Morphism& phi) {
  return G.mul(phi.u, G.inv(phi.v));
}

Morphism identity_at(const Group& G, const GroupElement& a) {
  G.check_element(a);
  return Morphism{a, G.identity()};
}

bool is_identity_morphism(const Group& G, const Morphism& phi) {
  return G.is_identity(phi.v);
}

Morphism compose(const Group& G, const Morphism& psi, const Morphism& phi) {
  GroupElement mid_in = source(G, psi);
  GroupElement mid_out = target(G, phi);
  if (mid_in != mid_out)
    throw ComposeError("morphisms are not composable: source of the outer morphism is " +
                       G.str(mid_in) + " but target of the inner morphism is " + G.str(mid_out));
  return Morphism{G.mul(psi.v, phi.u), G.mul(psi.v, phi.v)};
}

Morphism inverse(const Group& G, const Morphism& phi) {
  GroupElement vi = G.inv(phi.v);
  return Morphism{G.mul(G.mul(vi, phi.u), vi), vi};
}

bool is_loop(const Group& G, const Morphism& phi) {
  return source(G, phi) == target(G, phi);
}

Morphism loop_power(const Group& G, const Morphism& phi, int n) {
  if (n < 0) throw DomainError("loop power requires n >= 0");
  if (!is_loop(G, phi)) throw DomainError("loop power requires a loop, got a morphism from " +
                                          G.str(source(G, phi)) + " to " + G.str(target(G, phi)));
  GroupElement g = source(G, phi);
  GroupElement tn = G.pow(phi.v, n);
  return Morphism{G.mul(g, tn), tn};
}

std::vector<Loop> enumerate_loops(const Group& G, int radius, int order_bound) {
  Ball ball = G.enumerate_ball(radius);
  std::vector<Loop> out;
  for (const GroupElement& g : ball.elements)
    for (const GroupElement& t : ball.elements) {
      if (G.mul(g, t) != G.mul(t, g)) continue;
      Loop loop;
      loop.phi = Morphism{G.mul(g, t), t};
      loop.base = g;
      loop.conjugator = t;
      loop.conjugator_order = G.element_order(t, order_bound);
      out.push_back(std::move(loop));
    }
  return out;
}

std::string component_of(const Group& G, const ConjugacyPartition& part, const Morphism& phi) {
  const std::string& s_label = part.label_of(source(G, phi));
  const std::string& t_label = part.label_of(target(G, phi));
  if (s_label != t_label)
    throw DomainError("partition closure radius " + std::to_string(part.closure_radius) +
                      " is too small: source and target of the morphism fall in different "
                      "approximate classes (" +
                      s_label + " vs " + t_label + ")");
  return s_label;
}

}  // namespace gring
