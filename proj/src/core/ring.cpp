#include "ring.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gring {
namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

RingElement& RingElement::add_term(const GroupElement& g, Complex c) {
  if (!terms_.empty() && terms_.begin()->first.group_key != g.group_key)
    throw DomainError("cannot mix elements of different groups in one ring element");
  auto [it, inserted] = terms_.try_emplace(g, Complex{});
  it->second += c;
  if (std::abs(it->second) <= kCoeffEpsilon) terms_.erase(it);
  return *this;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

RingElement& RingElement::scale(Complex c) {
  if (std::abs(c) <= kCoeffEpsilon) {
    terms_.clear();
    return *this;
  }
  std::map<GroupElement, Complex> out;
  for (const auto& [g, v] : terms_) {
    Complex w = c * v;
    if (std::abs(w) > kCoeffEpsilon) out.emplace(g, w);
  }
  terms_ = std::move(out);
  return *this;
}

RingElement convolve(const Group& G, const RingElement& u, const RingElement& v) {
  RingElement out;
  for (const auto& [g, cu] : u.terms()) {
    G.check_element(g);
    for (const auto& [h, cv] : v.terms()) out.add_term(G.mul(g, h), cu * cv);
  }
  for (const auto& [h, cv] : v.terms()) G.check_element(h);
  return out;
}

double sup_norm(const RingElement& w) {
  double m = 0.0;
  for (const auto& [g, c] : w.terms()) m = std::max(m, std::abs(c));
  return m;
}

double sup_distance(const RingElement& a, const RingElement& b) { return sup_norm(a - b); }

double windowed_sup_norm(const Group& G, const RingElement& w, std::optional<int> window) {
  if (!window) return sup_norm(w);
  double m = 0.0;
  for (const auto& [g, c] : w.terms())
    if (G.word_length_at_most(g, *window)) m = std::max(m, std::abs(c));
  return m;
}

std::string to_string(const Group& G, const RingElement& w) {
  if (w.zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : w.terms()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << format_double(c.real());
    if (c.imag() != 0.0) out << (c.imag() > 0 ? "+" : "") << format_double(c.imag()) << 'i';
    out << ")*" << G.str(g);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Norms

NormSpec NormSpec::lp(double p) {
  if (!(p >= 1.0)) throw DomainError("lp norm requires p >= 1");
  return {Kind::Lp, p, 0.0};
}

NormSpec NormSpec::exp_weight(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("exp-weight norm requires alpha > 0");
  return {Kind::ExpWeight, 0.0, alpha};
}

NormSpec NormSpec::parse(const std::string& text) {
  std::string name = text;
  std::string arg;
  if (auto pos = text.find(':'); pos != std::string::npos) {
    name = text.substr(0, pos);
    arg = text.substr(pos + 1);
  }
  auto need_value = [&]() {
    if (arg.empty()) throw ParseError("norm spec '" + text + "' requires a parameter");
    try {
      std::size_t used = 0;
      double v = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return v;
    } catch (const std::exception&) {
      throw ParseError("norm spec '" + text + "' has a malformed parameter");
    }
  };
  if (name == "sup") {
    if (!arg.empty()) throw ParseError("norm spec 'sup' takes no parameter");
    return sup();
  }
  if (name == "lp") return lp(need_value());
  if (name == "expw") return exp_weight(need_value());
  throw ParseError("unknown norm '" + name + "'");
}

std::string NormSpec::str() const {
  switch (kind) {
    case Kind::Sup: return "sup";
    case Kind::Lp: return "lp:" + format_double(p);
    case Kind::ExpWeight: return "expw:" + format_double(alpha);
  }
  throw Error("unreachable norm kind");
}

double norm(const Group& G, const RingElement& w, const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::Sup:
      return sup_norm(w);
    case NormSpec::Kind::Lp: {
      double acc = 0.0;
      for (const auto& [g, c] : w.terms()) acc += std::pow(std::abs(c), spec.p);
      return std::pow(acc, 1.0 / spec.p);
    }
    case NormSpec::Kind::ExpWeight: {
      double acc = 0.0;
      for (const auto& [g, c] : w.terms())
        acc += std::abs(c) * std::exp(-spec.alpha * G.word_length(g));
      return acc;
    }
  }
  throw Error("unreachable norm kind");
}

SubordinationReport check_subordination(const Group& G, const NormSpec& spec, int probe_radius) {
  if (probe_radius < 0) throw DomainError("probe radius must be non-negative");
  SubordinationReport report;
  report.spec = spec;
  report.probe_radius = probe_radius;

  Ball ball = G.enumerate_ball(probe_radius);
  double worst = 0.0;
  for (const GroupElement& g : ball.elements) {
    RingElement delta = RingElement::basis(g);
    double candidate = norm(G, delta, spec);
    if (candidate > 0.0) worst = std::max(worst, sup_norm(delta) / candidate);
  }
  report.observed_c = worst;

  switch (spec.kind) {
    case NormSpec::Kind::Sup:
    case NormSpec::Kind::Lp:
      // sup w <= ||w||_p for every p >= 1 (a single coefficient already
      // contributes |c|^p <= sum), so the constant 1 works uniformly.
      report.subordinate = true;
      report.c = 1.0;
      break;
    case NormSpec::Kind::ExpWeight: {
      // exp(alpha n) * basis(g_n) with |g_n| = n has candidate norm 1 but sup
      // norm exp(alpha n): no uniform constant exists once the group is
      // infinite.  Finite groups have bounded length, so the constant
      // exp(alpha * diameter) works.
      if (G.finite()) {
        int r = probe_radius;
        while (!ball.saturated) ball = G.enumerate_ball(++r);
        int diameter = 0;
        for (const auto& [g, len] : ball.lengths) diameter = std::max(diameter, len);
        report.subordinate = true;
        report.c = std::exp(spec.alpha * diameter);
        break;
      }
      report.subordinate = false;
      report.c = 0.0;
      int last_len = -1;
      for (const GroupElement& g : ball.elements) {
        int len = ball.length_of(g);
        if (len <= last_len || len == 0) continue;  // first element of each sphere
        last_len = len;
        RingElement w = RingElement::basis(g);
        w.scale(Complex{std::exp(spec.alpha * len), 0.0});
        SubordinationWitnessRow row;
        row.n = len;
        row.g = g;
        row.norm_value = norm(G, w, spec);
        row.sup_value = sup_norm(w);
        row.ratio = row.sup_value / row.norm_value;
        report.witnesses.push_back(std::move(row));
      }
      break;
    }
  }
  return report;
}

}  // namespace gring
