// Shared fixtures for the unit tests.
#pragma once

#include <complex>
#include <string>

#include "core/character.hpp"
#include "core/derivation.hpp"
#include "core/group.hpp"
#include "core/maps.hpp"
#include "core/ring.hpp"

namespace testutil {

inline gring::Group make_group(const std::string& spec) {
  return gring::Group(gring::GroupSpec::parse(spec));
}

inline gring::GroupElement el(const gring::Group& G, const std::string& word) {
  return G.parse(word);
}

/// delta_g as a ring element.
inline gring::RingElement basis(const gring::Group& G, const std::string& word) {
  return gring::RingElement::basis(G.parse(word));
}

/// Sum of delta_g with the given coefficients, e.g. lin(G, {{"x", 2.0}, {"y", -1.0}}).
inline gring::RingElement lin(
    const gring::Group& G,
    std::initializer_list<std::pair<std::string, std::complex<double>>> terms) {
  gring::RingElement w;
  for (const auto& [word, coeff] : terms) w.add_term(G.parse(word), coeff);
  return w;
}

inline double abs_of(const std::complex<double>& z) { return std::abs(z); }

}  // namespace testutil
