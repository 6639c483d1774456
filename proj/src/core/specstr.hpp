#pragma once

#include "analysis.hpp"

namespace gring {

/// Parse a ring-element operand: either a word ("x*y^-1", giving the basis
/// element) or "@file.json" (a serialized ring element).
RingElement parse_ring_operand(const Group& G, const std::string& text);

/// Parse a character spec string:
///   inner:<word-or-@file>      chi = a(source) - a(target)
///   potential:@file.json       chi = f(source) - f(target)
///   central:<z>,<gen=value,..> chi = t(v) on loops at z (also ';' separator)
///   tabulated:@file.json       explicit table
Character parse_character_spec(const Group& G, const std::string& text);

/// Parse a derivation spec string:
///   inner:<word-or-@file>          exact, d(x) = x a - a x
///   central:<z>;<gen=value,..>     exact, d(g) = t(g) g z
///   potential:@file.json           truncated to trunc_radius
///   fromchar:<character-spec>      truncated to trunc_radius
///   stinner:<a>;<sigma>;<tau>      exact twisted inner derivation
///   @file.json                     serialized table (radii from the file)
/// domain_radius / trunc_radius apply where the form above says so.
Derivation parse_derivation_spec(const Group& G, const std::string& text, int domain_radius,
                                 int trunc_radius);

}  // namespace gring
