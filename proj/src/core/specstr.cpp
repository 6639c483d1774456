#include "specstr.hpp"

#include "json_io.hpp"

namespace gring {
namespace {

/// Split off the form name before the first ':'.
std::pair<std::string, std::string> split_form(const std::string& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos) return {text, ""};
  return {text.substr(0, pos), text.substr(pos + 1)};
}

/// Split "z-part<sep>rest" at the first ',' or ';'.
std::pair<std::string, std::string> split_central(const std::string& body) {
  auto pos = body.find_first_of(",;");
  if (pos == std::string::npos) return {body, ""};
  return {body.substr(0, pos), body.substr(pos + 1)};
}

}  // namespace

RingElement parse_ring_operand(const Group& G, const std::string& text) {
  if (text.empty()) throw ParseError("empty ring-element operand");
  if (text[0] == '@') return ring_from_json(G, load_json_file(text.substr(1)));
  return RingElement::basis(G.parse(text));
}

Character parse_character_spec(const Group& G, const std::string& text) {
  auto [form, body] = split_form(text);
  if (form == "inner") return Character::inner(parse_ring_operand(G, body));
  if (form == "potential") {
    if (body.empty() || body[0] != '@')
      throw ParseError("potential character spec needs '@file.json'");
    PotentialData data = potential_from_json(G, load_json_file(body.substr(1)));
    return Character::potential(std::move(data.f), data.radius);
  }
  if (form == "central") {
    auto [z_text, hom_text] = split_central(body);
    if (z_text.empty()) throw ParseError("central character spec needs a central element");
    return Character::central(G, G.parse(z_text), Homomorphism::parse(G, hom_text));
  }
  if (form == "tabulated") {
    if (body.empty() || body[0] != '@')
      throw ParseError("tabulated character spec needs '@file.json'");
    return Character::tabulated(tabulated_from_json(G, load_json_file(body.substr(1))));
  }
  throw ParseError("unknown character form '" + form + "'");
}

Derivation parse_derivation_spec(const Group& G, const std::string& text, int domain_radius,
                                 int trunc_radius) {
  if (!text.empty() && text[0] == '@')
    return derivation_from_json(G, load_json_file(text.substr(1)));

  auto [form, body] = split_form(text);
  if (form == "inner")
    return inner_derivation(G, parse_ring_operand(G, body), domain_radius);
  if (form == "central") {
    auto [z_text, hom_text] = split_central(body);
    if (z_text.empty()) throw ParseError("central derivation spec needs a central element");
    return central_derivation(G, G.parse(z_text), Homomorphism::parse(G, hom_text),
                              domain_radius);
  }
  if (form == "potential") {
    if (body.empty() || body[0] != '@')
      throw ParseError("potential derivation spec needs '@file.json'");
    PotentialData data = potential_from_json(G, load_json_file(body.substr(1)));
    return potential_derivation(G, data.f, domain_radius, trunc_radius, data.radius);
  }
  if (form == "fromchar")
    return derivation_from_character(G, parse_character_spec(G, body), domain_radius,
                                     trunc_radius);
  if (form == "stinner") {
    // a;sigma;tau — split on the two remaining ';'
    auto first = body.find(';');
    if (first == std::string::npos)
      throw ParseError("stinner derivation spec is 'stinner:<a>;<sigma>;<tau>'");
    auto second = body.find(';', first + 1);
    if (second == std::string::npos)
      throw ParseError("stinner derivation spec is 'stinner:<a>;<sigma>;<tau>'");
    RingElement a = parse_ring_operand(G, body.substr(0, first));
    EndomorphismSpec sigma =
        EndomorphismSpec::parse(G, body.substr(first + 1, second - first - 1));
    EndomorphismSpec tau = EndomorphismSpec::parse(G, body.substr(second + 1));
    return sigma_tau_inner_derivation(G, a, sigma, tau, domain_radius);
  }
  throw ParseError("unknown derivation form '" + form + "'");
}

}  // namespace gring
