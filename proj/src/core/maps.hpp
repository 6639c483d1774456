#pragma once

#include <map>
#include <string>
#include <vector>

#include "ring.hpp"

namespace gring {

/// An additive-valued homomorphism t : G -> (C, +), stored by its values on
/// the generators.  Construction validates the defining relations of the
/// group exactly, so torsion generators force the value zero (any finite
/// group only carries the zero homomorphism).
class Homomorphism {
 public:
  Homomorphism(const Group& G, const std::map<std::string, Complex>& generator_values);

  static Homomorphism zero(const Group& G);
  /// Parse "x=1,y=-2.5" (empty string or "0" meaning the zero map).
  static Homomorphism parse(const Group& G, const std::string& text);

  Complex operator()(const Group& G, const GroupElement& g) const;
  Complex generator_value(std::size_t i) const { return values_[i]; }
  bool trivial() const;
  std::string str(const Group& G) const;

 private:
  Homomorphism() = default;
  std::uint32_t group_key_ = 0;
  std::vector<Complex> values_;  // one per generator
};

/// A group endomorphism given by generator images.  Construction validates
/// the defining relations exactly (images must satisfy them as group
/// identities); evaluation extends along the canonical factorisation, with
/// the derived heisenberg symbol z sent to the commutator of the images.
class EndomorphismSpec {
 public:
  EndomorphismSpec(const Group& G, std::vector<GroupElement> generator_images);

  static EndomorphismSpec identity(const Group& G);
  /// Parse "id" or "x->x^2,y->y" (also accepting '=' for '->').
  static EndomorphismSpec parse(const Group& G, const std::string& text);

  GroupElement apply(const Group& G, const GroupElement& g) const;
  /// Linear extension to the group ring.
  RingElement apply(const Group& G, const RingElement& w) const;

  bool is_identity_map(const Group& G) const;
  const std::vector<GroupElement>& images() const { return images_; }
  std::string str(const Group& G) const;

 private:
  std::uint32_t group_key_ = 0;
  std::vector<GroupElement> images_;  // one per generator
};

}  // namespace gring
