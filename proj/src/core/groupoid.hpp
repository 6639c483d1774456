#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace gring {

/// A morphism of the adjoint-action groupoid of a group: an ordered pair
/// (u, v) with source v^-1 u and target u v^-1, so that v conjugates the
/// source to the target.  Objects are the group elements themselves.
struct Morphism {
  GroupElement u;
  GroupElement v;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

GroupElement source(const Group& G, const Morphism& phi);  ///< v^-1 u
GroupElement target(const Group& G, const Morphism& phi);  ///< u v^-1

/// The identity morphism at the object a: (a, e).
Morphism identity_at(const Group& G, const GroupElement& a);
bool is_identity_morphism(const Group& G, const Morphism& phi);

/// Composition psi . phi, defined when source(psi) == target(phi); with
/// psi = (u', v') and phi = (u, v) the composite is (v' u, v' v).  Throws
/// ComposeError (naming both boundary objects) when undefined.
Morphism compose(const Group& G, const Morphism& psi, const Morphism& phi);

/// Two-sided inverse (v^-1 u v^-1, v^-1).
Morphism inverse(const Group& G, const Morphism& phi);

/// True when source and target agree.
bool is_loop(const Group& G, const Morphism& phi);

/// n-fold composite of a loop (g t, t): (g t^n, t^n).  Requires n >= 0 and a
/// loop; n = 0 yields the identity at the base object.
Morphism loop_power(const Group& G, const Morphism& phi, int n);

/// A loop at base object g with conjugator t (an element of the centralizer
/// of g), i.e. the morphism (g t, t).
struct Loop {
  Morphism phi;
  GroupElement base;
  GroupElement conjugator;
  OrderResult conjugator_order;
};

/// All loops (g t, t) with g in Ball(radius) and t in Ball(radius)
/// centralizing g, in graded-lexicographic order of (g, t).
std::vector<Loop> enumerate_loops(const Group& G, int radius,
                                  int order_bound = kDefaultOrderBound);

/// Connected-component label of a morphism: the conjugacy-class label shared
/// by its source and target.  Throws OutOfRangeError when a boundary object
/// lies outside the partitioned ball, and DomainError when the partition's
/// closure radius is too small to see that source and target are conjugate.
std::string component_of(const Group& G, const ConjugacyPartition& part, const Morphism& phi);

}  // namespace gring
