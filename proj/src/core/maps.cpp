#include "maps.hpp"

#include <cmath>
#include <sstream>

namespace gring {
namespace {

constexpr double kRelationTol = 1e-12;

GroupElement commutator(const Group& G, const GroupElement& a, const GroupElement& b) {
  return G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Homomorphism

Homomorphism::Homomorphism(const Group& G, const std::map<std::string, Complex>& generator_values) {
  group_key_ = G.key();
  values_.assign(G.generator_count(), Complex{});
  for (const auto& [name, value] : generator_values) {
    bool found = false;
    for (std::size_t i = 0; i < G.generator_count(); ++i)
      if (G.generator_labels()[i] == name) {
        values_[i] = value;
        found = true;
        break;
      }
    if (!found)
      throw ParseError("unknown generator '" + name + "' in homomorphism for " + G.spec_str());
  }

  // Exact relation checks: t extends to G iff every defining relator maps to
  // zero under additivity.
  auto require_zero = [&](Complex v, const std::string& what) {
    if (std::abs(v) > kRelationTol)
      throw DomainError("values do not define a homomorphism on " + G.spec_str() + ": " + what);
  };
  switch (G.spec().kind) {
    case GroupKind::Free:
    case GroupKind::FreeAbelian:
    case GroupKind::Heisenberg:
      // No relator constrains an additive target: commutators always map to 0.
      break;
    case GroupKind::Cyclic:
      require_zero(static_cast<double>(G.spec().param) * values_[0],
                   "the torsion relation x^n = e forces t(x) = 0");
      break;
    case GroupKind::Dihedral:
      require_zero(static_cast<double>(G.spec().param) * values_[0],
                   "the torsion relation r^n = e forces t(r) = 0");
      require_zero(2.0 * values_[1], "the torsion relation s^2 = e forces t(s) = 0");
      break;
    case GroupKind::Symmetric:
      for (std::size_t i = 0; i < values_.size(); ++i)
        require_zero(2.0 * values_[i],
                     "the torsion relation " + G.generator_labels()[i] + "^2 = e forces t(" +
                         G.generator_labels()[i] + ") = 0");
      break;
  }
}

Homomorphism Homomorphism::zero(const Group& G) {
  Homomorphism h;
  h.group_key_ = G.key();
  h.values_.assign(G.generator_count(), Complex{});
  return h;
}

Homomorphism Homomorphism::parse(const Group& G, const std::string& text) {
  std::string t = trim(text);
  if (t.empty() || t == "0") return zero(G);
  std::map<std::string, Complex> values;
  for (const std::string& piece : split(t, ',')) {
    std::string item = trim(piece);
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'gen=value' in homomorphism spec, got '" + item + "'");
    std::string name = trim(item.substr(0, eq));
    std::string value_text = trim(item.substr(eq + 1));
    try {
      std::size_t used = 0;
      double v = std::stod(value_text, &used);
      if (used != value_text.size()) throw std::invalid_argument(value_text);
      values[name] = Complex{v, 0.0};
    } catch (const std::exception&) {
      throw ParseError("malformed value '" + value_text + "' in homomorphism spec");
    }
  }
  return Homomorphism(G, values);
}

Complex Homomorphism::operator()(const Group& G, const GroupElement& g) const {
  if (G.key() != group_key_)
    throw DomainError("homomorphism evaluated against the wrong group");
  G.check_element(g);
  Complex acc{};
  for (const auto& [sym, exp] : G.canonical_factors(g)) {
    if (sym < values_.size()) acc += static_cast<double>(exp) * values_[sym];
    // the derived heisenberg symbol z is a commutator, so it maps to 0
  }
  return acc;
}

bool Homomorphism::trivial() const {
  for (const Complex& v : values_)
    if (std::abs(v) > 0.0) return false;
  return true;
}

std::string Homomorphism::str(const Group& G) const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (std::abs(values_[i]) == 0.0) continue;
    if (!first) out << ',';
    first = false;
    out << G.generator_labels()[i] << '=' << values_[i].real();
    if (values_[i].imag() != 0.0) out << (values_[i].imag() > 0 ? "+" : "") << values_[i].imag()
                                      << 'i';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// EndomorphismSpec

EndomorphismSpec::EndomorphismSpec(const Group& G, std::vector<GroupElement> generator_images)
    : group_key_(G.key()), images_(std::move(generator_images)) {
  if (images_.size() != G.generator_count())
    throw DomainError("endomorphism needs exactly one image per generator of " + G.spec_str());
  for (const GroupElement& img : images_) G.check_element(img);

  auto require_identity = [&](const GroupElement& g, const std::string& what) {
    if (!G.is_identity(g))
      throw DomainError("generator images do not define an endomorphism of " + G.spec_str() +
                        ": the relation " + what + " is not preserved");
  };
  switch (G.spec().kind) {
    case GroupKind::Free:
      break;  // no relations
    case GroupKind::FreeAbelian:
      for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
          require_identity(commutator(G, images_[i], images_[j]),
                           "[" + G.generator_labels()[i] + ", " + G.generator_labels()[j] + "] = e");
      break;
    case GroupKind::Heisenberg: {
      GroupElement z = commutator(G, images_[0], images_[1]);
      require_identity(commutator(G, images_[0], z), "[x, [x, y]] = e");
      require_identity(commutator(G, images_[1], z), "[y, [x, y]] = e");
      break;
    }
    case GroupKind::Cyclic:
      require_identity(G.pow(images_[0], G.spec().param), "x^n = e");
      break;
    case GroupKind::Dihedral:
      require_identity(G.pow(images_[0], G.spec().param), "r^n = e");
      require_identity(G.pow(images_[1], 2), "s^2 = e");
      require_identity(G.mul(G.mul(images_[1], images_[0]), G.mul(images_[1], images_[0])),
                       "(s r)^2 = e");
      break;
    case GroupKind::Symmetric:
      for (std::size_t i = 0; i < images_.size(); ++i)
        require_identity(G.pow(images_[i], 2), G.generator_labels()[i] + "^2 = e");
      for (std::size_t i = 0; i + 1 < images_.size(); ++i)
        require_identity(G.pow(G.mul(images_[i], images_[i + 1]), 3),
                         "(" + G.generator_labels()[i] + " " + G.generator_labels()[i + 1] +
                             ")^3 = e");
      for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 2; j < images_.size(); ++j)
          require_identity(G.pow(G.mul(images_[i], images_[j]), 2),
                           "(" + G.generator_labels()[i] + " " + G.generator_labels()[j] +
                               ")^2 = e");
      break;
  }
}

EndomorphismSpec EndomorphismSpec::identity(const Group& G) {
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < G.generator_count(); ++i) images.push_back(G.generator(i));
  return EndomorphismSpec(G, std::move(images));
}

EndomorphismSpec EndomorphismSpec::parse(const Group& G, const std::string& text) {
  std::string t = trim(text);
  if (t.empty() || t == "id") return identity(G);
  std::map<std::string, GroupElement> images;
  for (const std::string& piece : split(t, ',')) {
    std::string item = trim(piece);
    std::string name, word;
    if (auto arrow = item.find("->"); arrow != std::string::npos) {
      name = trim(item.substr(0, arrow));
      word = trim(item.substr(arrow + 2));
    } else if (auto eq = item.find('='); eq != std::string::npos) {
      name = trim(item.substr(0, eq));
      word = trim(item.substr(eq + 1));
    } else {
      throw ParseError("expected 'gen->word' in endomorphism spec, got '" + item + "'");
    }
    if (!images.emplace(name, G.parse(word)).second)
      throw ParseError("generator '" + name + "' assigned twice in endomorphism spec");
  }
  std::vector<GroupElement> ordered;
  for (std::size_t i = 0; i < G.generator_count(); ++i) {
    auto it = images.find(G.generator_labels()[i]);
    ordered.push_back(it == images.end() ? G.generator(i) : it->second);
    if (it != images.end()) images.erase(it);
  }
  if (!images.empty())
    throw ParseError("unknown generator '" + images.begin()->first + "' in endomorphism spec");
  return EndomorphismSpec(G, std::move(ordered));
}

GroupElement EndomorphismSpec::apply(const Group& G, const GroupElement& g) const {
  if (G.key() != group_key_)
    throw DomainError("endomorphism evaluated against the wrong group");
  G.check_element(g);
  GroupElement acc = G.identity();
  for (const auto& [sym, exp] : G.canonical_factors(g)) {
    GroupElement image = sym < images_.size()
                             ? images_[sym]
                             : commutator(G, images_[0], images_[1]);  // heisenberg z
    acc = G.mul(acc, G.pow(image, exp));
  }
  return acc;
}

RingElement EndomorphismSpec::apply(const Group& G, const RingElement& w) const {
  RingElement out;
  for (const auto& [g, c] : w.terms()) out.add_term(apply(G, g), c);
  return out;
}

bool EndomorphismSpec::is_identity_map(const Group& G) const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != G.generator(i)) return false;
  return true;
}

std::string EndomorphismSpec::str(const Group& G) const {
  if (is_identity_map(G)) return "id";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!first) out << ',';
    first = false;
    out << G.generator_labels()[i] << "->" << G.str(images_[i]);
  }
  return out.str();
}

}  // namespace gring
