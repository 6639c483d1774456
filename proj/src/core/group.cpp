#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace gring {
namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod_pos(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string name = text;
  std::string arg;
  if (auto pos = text.find(':'); pos != std::string::npos) {
    name = text.substr(0, pos);
    arg = text.substr(pos + 1);
  }
  auto need_param = [&](int lo, int hi) {
    if (arg.empty()) throw ParseError("group spec '" + text + "' requires a parameter");
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw ParseError("group spec '" + text + "' has a malformed parameter");
    }
    if (value < lo || value > hi)
      throw ParseError("group spec '" + text + "' parameter out of range [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
    return value;
  };

  GroupSpec spec;
  if (name == "free") {
    spec.kind = GroupKind::Free;
    spec.param = need_param(1, 64);
  } else if (name == "abelian") {
    spec.kind = GroupKind::FreeAbelian;
    spec.param = need_param(1, 64);
  } else if (name == "heisenberg") {
    if (!arg.empty()) throw ParseError("group spec 'heisenberg' takes no parameter");
    spec.kind = GroupKind::Heisenberg;
    spec.param = 0;
  } else if (name == "cyclic") {
    spec.kind = GroupKind::Cyclic;
    spec.param = need_param(1, 1'000'000);
  } else if (name == "dihedral") {
    spec.kind = GroupKind::Dihedral;
    spec.param = need_param(1, 1'000'000);
  } else if (name == "symmetric") {
    spec.kind = GroupKind::Symmetric;
    spec.param = need_param(1, 5);
  } else {
    throw ParseError("unknown group family '" + name + "'");
  }
  return spec;
}

std::string GroupSpec::str() const {
  switch (kind) {
    case GroupKind::Free: return "free:" + std::to_string(param);
    case GroupKind::FreeAbelian: return "abelian:" + std::to_string(param);
    case GroupKind::Heisenberg: return "heisenberg";
    case GroupKind::Cyclic: return "cyclic:" + std::to_string(param);
    case GroupKind::Dihedral: return "dihedral:" + std::to_string(param);
    case GroupKind::Symmetric: return "symmetric:" + std::to_string(param);
  }
  throw Error("unreachable group kind");
}

// ---------------------------------------------------------------------------
// Ball / OrderResult / ConjugacyPartition

int Ball::length_of(const GroupElement& g) const {
  auto it = lengths.find(g);
  if (it == lengths.end())
    throw OutOfRangeError("element lies outside the ball of radius " + std::to_string(radius));
  return it->second;
}

std::string OrderResult::str() const {
  if (finite) return "finite(" + std::to_string(order) + ")";
  return "exceeds-bound(" + std::to_string(bound) + ")";
}

const std::string& ConjugacyPartition::label_of(const GroupElement& g) const {
  auto it = class_index.find(g);
  if (it == class_index.end())
    throw OutOfRangeError("element lies outside the partitioned ball of radius " +
                          std::to_string(radius));
  return labels[it->second];
}

// ---------------------------------------------------------------------------
// Group: construction

struct Group::BallCache {
  mutable std::mutex mutex;
  std::vector<std::vector<Payload>> levels;  // levels[r]: payloads of length exactly r, sorted
  std::map<Payload, int> dist;
  bool saturated = false;
};

Group::Group(const GroupSpec& spec, std::size_t ball_budget)
    : spec_(spec), budget_(ball_budget), cache_(std::make_unique<BallCache>()) {
  key_ = fnv1a(spec_.str());
  switch (spec_.kind) {
    case GroupKind::Free:
    case GroupKind::FreeAbelian: {
      static const char* kShort[] = {"x", "y", "z", "w"};
      for (int i = 0; i < spec_.param; ++i)
        labels_.push_back(spec_.param <= 4 ? kShort[i] : "g" + std::to_string(i + 1));
      break;
    }
    case GroupKind::Heisenberg:
      labels_ = {"x", "y"};
      break;
    case GroupKind::Cyclic:
      labels_ = {"x"};
      break;
    case GroupKind::Dihedral:
      labels_ = {"r", "s"};
      break;
    case GroupKind::Symmetric:
      for (int i = 1; i < spec_.param; ++i) labels_.push_back("s" + std::to_string(i));
      break;
  }
}

Group::Group(const std::string& spec_text, std::size_t ball_budget)
    : Group(GroupSpec::parse(spec_text), ball_budget) {}

Group::Group(Group&&) noexcept = default;
Group& Group::operator=(Group&&) noexcept = default;
Group::~Group() = default;

bool Group::finite() const {
  switch (spec_.kind) {
    case GroupKind::Cyclic:
    case GroupKind::Dihedral:
    case GroupKind::Symmetric: return true;
    default: return false;
  }
}

std::optional<std::size_t> Group::group_order() const {
  switch (spec_.kind) {
    case GroupKind::Cyclic: return static_cast<std::size_t>(spec_.param);
    case GroupKind::Dihedral: return static_cast<std::size_t>(2 * spec_.param);
    case GroupKind::Symmetric: {
      std::size_t f = 1;
      for (int i = 2; i <= spec_.param; ++i) f *= static_cast<std::size_t>(i);
      return f;
    }
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Group: payload arithmetic

Group::Payload Group::identity_payload() const {
  switch (spec_.kind) {
    case GroupKind::Free: return {};
    case GroupKind::FreeAbelian: return Payload(spec_.param, 0);
    case GroupKind::Heisenberg: return {0, 0, 0};
    case GroupKind::Cyclic: return {0};
    case GroupKind::Dihedral: return {0, 0};
    case GroupKind::Symmetric: {
      Payload p(spec_.param);
      std::iota(p.begin(), p.end(), 0);
      return p;
    }
  }
  throw Error("unreachable group kind");
}

Group::Payload Group::mul_payload(const Payload& a, const Payload& b) const {
  switch (spec_.kind) {
    case GroupKind::Free: {
      Payload out = a;
      for (std::int64_t letter : b) {
        if (!out.empty() && out.back() == -letter)
          out.pop_back();
        else
          out.push_back(letter);
      }
      return out;
    }
    case GroupKind::FreeAbelian: {
      Payload out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
      return out;
    }
    case GroupKind::Heisenberg:
      return {a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]};
    case GroupKind::Cyclic:
      return {mod_pos(a[0] + b[0], spec_.param)};
    case GroupKind::Dihedral: {
      std::int64_t k = a[0] + (a[1] ? -b[0] : b[0]);
      return {mod_pos(k, spec_.param), a[1] ^ b[1]};
    }
    case GroupKind::Symmetric: {
      Payload out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
      return out;
    }
  }
  throw Error("unreachable group kind");
}

Group::Payload Group::inv_payload(const Payload& a) const {
  switch (spec_.kind) {
    case GroupKind::Free: {
      Payload out(a.rbegin(), a.rend());
      for (auto& letter : out) letter = -letter;
      return out;
    }
    case GroupKind::FreeAbelian: {
      Payload out = a;
      for (auto& v : out) v = -v;
      return out;
    }
    case GroupKind::Heisenberg:
      return {-a[0], -a[1], a[0] * a[1] - a[2]};
    case GroupKind::Cyclic:
      return {mod_pos(-a[0], spec_.param)};
    case GroupKind::Dihedral:
      if (a[1]) return a;  // reflections are involutions
      return {mod_pos(-a[0], spec_.param), 0};
    case GroupKind::Symmetric: {
      Payload out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = i;
      return out;
    }
  }
  throw Error("unreachable group kind");
}

void Group::validate_payload(const Payload& a) const {
  auto fail = [&] { throw DomainError("malformed element payload for group " + spec_.str()); };
  switch (spec_.kind) {
    case GroupKind::Free:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 || std::abs(a[i]) > spec_.param) fail();
        if (i > 0 && a[i] == -a[i - 1]) fail();
      }
      break;
    case GroupKind::FreeAbelian:
      if (a.size() != static_cast<std::size_t>(spec_.param)) fail();
      break;
    case GroupKind::Heisenberg:
      if (a.size() != 3) fail();
      break;
    case GroupKind::Cyclic:
      if (a.size() != 1 || a[0] < 0 || a[0] >= spec_.param) fail();
      break;
    case GroupKind::Dihedral:
      if (a.size() != 2 || a[0] < 0 || a[0] >= spec_.param || (a[1] != 0 && a[1] != 1)) fail();
      break;
    case GroupKind::Symmetric: {
      if (a.size() != static_cast<std::size_t>(spec_.param)) fail();
      std::vector<bool> seen(a.size(), false);
      for (std::int64_t v : a) {
        if (v < 0 || v >= spec_.param || seen[static_cast<std::size_t>(v)]) fail();
        seen[static_cast<std::size_t>(v)] = true;
      }
      break;
    }
  }
}

GroupElement Group::wrap(Payload p) const { return GroupElement{key_, std::move(p)}; }

void Group::check_element(const GroupElement& g) const {
  if (g.group_key != key_)
    throw DomainError("element does not belong to group " + spec_.str());
  validate_payload(g.payload);
}

GroupElement Group::identity() const { return wrap(identity_payload()); }

GroupElement Group::generator(std::size_t i) const {
  if (i >= labels_.size())
    throw DomainError("generator index " + std::to_string(i) + " out of range for " + spec_.str());
  switch (spec_.kind) {
    case GroupKind::Free: return wrap({static_cast<std::int64_t>(i) + 1});
    case GroupKind::FreeAbelian: {
      Payload p(spec_.param, 0);
      p[i] = 1;
      return wrap(std::move(p));
    }
    case GroupKind::Heisenberg:
      return i == 0 ? wrap({1, 0, 0}) : wrap({0, 1, 0});
    case GroupKind::Cyclic: return wrap({1});
    case GroupKind::Dihedral: return i == 0 ? wrap({1, 0}) : wrap({0, 1});
    case GroupKind::Symmetric: {
      Payload p = identity_payload();
      std::swap(p[i], p[i + 1]);
      return wrap(std::move(p));
    }
  }
  throw Error("unreachable group kind");
}

std::vector<GroupElement> Group::symmetric_generators() const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    GroupElement g = generator(i);
    GroupElement gi = inv(g);
    out.push_back(g);
    if (gi != g) out.push_back(std::move(gi));
  }
  return out;
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  return wrap(mul_payload(a.payload, b.payload));
}

GroupElement Group::inv(const GroupElement& a) const {
  check_element(a);
  return wrap(inv_payload(a.payload));
}

GroupElement Group::conjugate(const GroupElement& t, const GroupElement& g) const {
  return mul(mul(t, g), inv(t));
}

bool Group::is_identity(const GroupElement& a) const {
  check_element(a);
  return a.payload == identity_payload();
}

GroupElement Group::pow(const GroupElement& a, std::int64_t n) const {
  check_element(a);
  if (std::abs(n) > kMaxExponent)
    throw DomainError("exponent magnitude exceeds " + std::to_string(kMaxExponent));
  if (n == 0) return identity();
  if (n < 0) return pow(inv(a), -n);
  switch (spec_.kind) {
    case GroupKind::Free: {
      // Cyclic reduction a = c h c^-1 makes the power a plain repetition of h.
      const Payload& w = a.payload;
      std::size_t lo = 0, hi = w.size();
      while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
      }
      Payload out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo));
      for (std::int64_t i = 0; i < n; ++i)
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(lo),
                   w.begin() + static_cast<std::ptrdiff_t>(hi));
      for (std::size_t i = lo; i > 0; --i) out.push_back(-w[i - 1]);
      return wrap(std::move(out));
    }
    case GroupKind::FreeAbelian: {
      Payload out = a.payload;
      for (auto& v : out) v *= n;
      return wrap(std::move(out));
    }
    case GroupKind::Heisenberg: {
      std::int64_t x = a.payload[0], y = a.payload[1], c = a.payload[2];
      return wrap({n * x, n * y, n * c + x * y * (n * (n - 1) / 2)});
    }
    case GroupKind::Cyclic:
      return wrap({mod_pos(a.payload[0] * (n % spec_.param), spec_.param)});
    case GroupKind::Dihedral:
    case GroupKind::Symmetric: {
      OrderResult ord = element_order(a, INT_MAX);
      std::int64_t r = n % ord.order;
      GroupElement acc = identity();
      for (std::int64_t i = 0; i < r; ++i) acc = mul(acc, a);
      return acc;
    }
  }
  throw Error("unreachable group kind");
}

OrderResult Group::element_order(const GroupElement& g, int bound) const {
  check_element(g);
  if (bound < 1) throw DomainError("order bound must be at least 1");
  auto finite = [&](std::int64_t o) {
    OrderResult r;
    r.bound = bound;
    if (o <= bound) {
      r.finite = true;
      r.order = static_cast<int>(o);
    }
    return r;
  };
  switch (spec_.kind) {
    case GroupKind::Free:
    case GroupKind::FreeAbelian:
    case GroupKind::Heisenberg:
      // Torsion-free families: only the identity has finite order, and a
      // bounded search can never certify anything beyond the bound anyway.
      if (is_identity(g)) return finite(1);
      return finite(static_cast<std::int64_t>(bound) + 1);
    case GroupKind::Cyclic:
      return finite(spec_.param / gcd64(spec_.param, g.payload[0]));
    case GroupKind::Dihedral:
      if (g.payload[1]) return finite(2);
      return finite(spec_.param / gcd64(spec_.param, g.payload[0]));
    case GroupKind::Symmetric: {
      std::int64_t o = 1;
      std::vector<bool> seen(g.payload.size(), false);
      for (std::size_t i = 0; i < g.payload.size(); ++i) {
        if (seen[i]) continue;
        std::int64_t len = 0;
        std::size_t j = i;
        while (!seen[j]) {
          seen[j] = true;
          j = static_cast<std::size_t>(g.payload[j]);
          ++len;
        }
        o = std::lcm(o, len);
      }
      return finite(o);
    }
  }
  throw Error("unreachable group kind");
}

// ---------------------------------------------------------------------------
// Group: word length and balls

void Group::ensure_levels(int radius) const {
  // caller holds cache_->mutex
  auto& c = *cache_;
  if (c.levels.empty()) {
    c.levels.push_back({identity_payload()});
    c.dist.emplace(identity_payload(), 0);
  }
  std::vector<Payload> gens;
  for (const GroupElement& s : symmetric_generators()) gens.push_back(s.payload);
  while (static_cast<int>(c.levels.size()) - 1 < radius && !c.saturated) {
    std::set<Payload> next;
    for (const Payload& p : c.levels.back())
      for (const Payload& s : gens) {
        Payload h = mul_payload(p, s);
        if (c.dist.find(h) == c.dist.end()) next.insert(std::move(h));
      }
    if (next.empty()) {
      c.saturated = true;
      break;
    }
    if (c.dist.size() + next.size() > budget_)
      throw ResourceError("ball enumeration for " + spec_.str() + " exceeds the element budget of " +
                          std::to_string(budget_) + " at radius " +
                          std::to_string(c.levels.size()));
    int len = static_cast<int>(c.levels.size());
    std::vector<Payload> level;
    level.reserve(next.size());
    for (const Payload& p : next) {
      c.dist.emplace(p, len);
      level.push_back(p);
    }
    c.levels.push_back(std::move(level));
    if (auto order = group_order(); order && c.dist.size() == *order) {
      c.saturated = true;
      break;
    }
  }
}

void Group::ensure_saturated() const {
  // caller holds cache_->mutex; only meaningful for finite families
  ensure_levels(INT_MAX);
}

Ball Group::enumerate_ball(int radius) const {
  if (radius < 0) throw DomainError("ball radius must be non-negative");
  std::scoped_lock lock(cache_->mutex);
  ensure_levels(radius);
  Ball ball;
  ball.radius = radius;
  int top = std::min<int>(radius, static_cast<int>(cache_->levels.size()) - 1);
  ball.saturated = cache_->saturated && top == static_cast<int>(cache_->levels.size()) - 1;
  for (int len = 0; len <= top; ++len)
    for (const Payload& p : cache_->levels[static_cast<std::size_t>(len)]) {
      GroupElement g = wrap(p);
      ball.lengths.emplace(g, len);
      ball.elements.push_back(std::move(g));
    }
  return ball;
}

int Group::word_length(const GroupElement& g) const {
  check_element(g);
  switch (spec_.kind) {
    case GroupKind::Free:
      return static_cast<int>(g.payload.size());
    case GroupKind::FreeAbelian: {
      std::int64_t total = 0;
      for (std::int64_t v : g.payload) total += std::abs(v);
      return static_cast<int>(total);
    }
    case GroupKind::Cyclic:
      return static_cast<int>(std::min(g.payload[0], spec_.param - g.payload[0]));
    case GroupKind::Heisenberg: {
      std::scoped_lock lock(cache_->mutex);
      auto it = cache_->dist.find(g.payload);
      if (it != cache_->dist.end()) return it->second;
      int current = static_cast<int>(cache_->levels.size()) - 1;
      std::int64_t lower = std::max<std::int64_t>(std::abs(g.payload[0]) + std::abs(g.payload[1]),
                                                  current + 1);
      throw OutOfRangeError("word length of " + str(g) +
                            " is not covered by the enumerated ball (current radius " +
                            std::to_string(current) + "); enumerate a ball of radius at least " +
                            std::to_string(lower) + " first");
    }
    case GroupKind::Dihedral:
    case GroupKind::Symmetric: {
      std::scoped_lock lock(cache_->mutex);
      ensure_saturated();
      return cache_->dist.at(g.payload);
    }
  }
  throw Error("unreachable group kind");
}

bool Group::word_length_at_most(const GroupElement& g, int limit) const {
  check_element(g);
  if (limit < 0) return false;
  if (spec_.kind == GroupKind::Heisenberg) {
    // Decide from Ball(limit): growing it here is bounded work (budget-guarded)
    // and keeps the predicate total even when nothing was enumerated yet.
    std::scoped_lock lock(cache_->mutex);
    ensure_levels(limit);
    auto it = cache_->dist.find(g.payload);
    return it != cache_->dist.end() && it->second <= limit;
  }
  return word_length(g) <= limit;
}

std::vector<GroupElement> Group::centralizer_in_ball(const GroupElement& g, int radius) const {
  check_element(g);
  Ball ball = enumerate_ball(radius);
  std::vector<GroupElement> out;
  for (const GroupElement& t : ball.elements)
    if (mul(t, g) == mul(g, t)) out.push_back(t);
  return out;
}

ConjugacyPartition Group::conjugacy_classes_in_ball(int radius, int closure_radius) const {
  if (radius < 0) throw DomainError("ball radius must be non-negative");
  if (closure_radius < radius)
    throw DomainError("closure radius (" + std::to_string(closure_radius) +
                      ") must be at least the ball radius (" + std::to_string(radius) + ")");
  Ball ball = enumerate_ball(radius);
  Ball closure = enumerate_ball(closure_radius);

  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < ball.elements.size(); ++i) index.emplace(ball.elements[i], i);

  std::vector<std::size_t> parent(ball.elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (const GroupElement& t : closure.elements)
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
      GroupElement h = conjugate(t, ball.elements[i]);
      auto it = index.find(h);
      if (it != index.end()) unite(i, it->second);
    }

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < ball.elements.size(); ++i) by_root[find(i)].push_back(i);

  ConjugacyPartition part;
  part.radius = radius;
  part.closure_radius = closure_radius;
  for (const auto& [root, members] : by_root) {
    std::vector<GroupElement> cls;
    for (std::size_t i : members) cls.push_back(ball.elements[i]);
    for (const GroupElement& g : cls) part.class_index.emplace(g, part.classes.size());
    part.labels.push_back(str(cls.front()));
    part.classes.push_back(std::move(cls));
  }
  return part;
}

// ---------------------------------------------------------------------------
// Group: words and symbols

std::size_t Group::symbol_count() const {
  return labels_.size() + (spec_.kind == GroupKind::Heisenberg ? 1 : 0);
}

const std::string& Group::symbol_label(std::size_t i) const {
  static const std::string kCentral = "z";
  if (i < labels_.size()) return labels_[i];
  if (spec_.kind == GroupKind::Heisenberg && i == labels_.size()) return kCentral;
  throw DomainError("symbol index out of range for " + spec_.str());
}

GroupElement Group::symbol_element(std::size_t i) const {
  if (i < labels_.size()) return generator(i);
  if (spec_.kind == GroupKind::Heisenberg && i == labels_.size()) return wrap({0, 0, 1});
  throw DomainError("symbol index out of range for " + spec_.str());
}

std::vector<std::pair<std::size_t, std::int64_t>> Group::canonical_factors(
    const GroupElement& g) const {
  check_element(g);
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  auto push = [&](std::size_t sym, std::int64_t exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().first == sym)
      out.back().second += exp;
    else
      out.emplace_back(sym, exp);
  };
  switch (spec_.kind) {
    case GroupKind::Free:
      for (std::int64_t letter : g.payload)
        push(static_cast<std::size_t>(std::abs(letter)) - 1, letter > 0 ? 1 : -1);
      break;
    case GroupKind::FreeAbelian:
      for (std::size_t i = 0; i < g.payload.size(); ++i) push(i, g.payload[i]);
      break;
    case GroupKind::Heisenberg:
      push(0, g.payload[0]);
      push(1, g.payload[1]);
      push(2, g.payload[2] - g.payload[0] * g.payload[1]);
      break;
    case GroupKind::Cyclic:
      push(0, g.payload[0]);
      break;
    case GroupKind::Dihedral:
      push(0, g.payload[0]);
      push(1, g.payload[1]);
      break;
    case GroupKind::Symmetric: {
      // Bubble decomposition: repeatedly clear the smallest descent.  The
      // letters come out right-to-left, and their count is the inversion
      // number, so the printed word is geodesic.
      Payload sigma = g.payload;
      Payload id = identity_payload();
      std::vector<std::size_t> letters;
      while (sigma != id) {
        std::size_t i = 0;
        while (i + 1 < sigma.size() && sigma[i] < sigma[i + 1]) ++i;
        letters.push_back(i);  // generator s_{i+1}
        std::swap(sigma[i], sigma[i + 1]);
      }
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) push(*it, 1);
      break;
    }
  }
  return out;
}

GroupElement Group::parse(const std::string& word) const {
  // strip whitespace
  std::string text;
  for (char c : word)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  if (text.empty()) throw ParseError("empty word");

  GroupElement acc = identity();
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    if (!first) {
      if (text[pos] != '*')
        throw ParseError("expected '*' at position " + std::to_string(pos) + " in '" + word + "'");
      ++pos;
    }
    first = false;
    std::size_t start = pos;
    while (pos < text.size() && is_word_char(text[pos])) ++pos;
    std::string name = text.substr(start, pos - start);
    if (name.empty())
      throw ParseError("expected a generator name at position " + std::to_string(start) + " in '" +
                       word + "'");
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t estart = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string digits = text.substr(estart, pos - estart);
      if (digits.empty() || digits == "-" || digits == "+")
        throw ParseError("malformed exponent in '" + word + "'");
      try {
        exp = std::stoll(digits);
      } catch (const std::exception&) {
        throw ParseError("malformed exponent in '" + word + "'");
      }
      if (std::abs(exp) > kMaxExponent)
        throw ParseError("exponent magnitude exceeds " + std::to_string(kMaxExponent));
    }
    if (name == "e") continue;  // e^k is the identity for any exponent
    std::size_t sym = symbol_count();
    for (std::size_t i = 0; i < symbol_count(); ++i)
      if (symbol_label(i) == name) {
        sym = i;
        break;
      }
    if (sym == symbol_count())
      throw ParseError("unknown generator '" + name + "' for group " + spec_.str());
    acc = mul(acc, pow(symbol_element(sym), exp));
  }
  return acc;
}

std::string Group::str(const GroupElement& g) const {
  auto factors = canonical_factors(g);
  if (factors.empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (const auto& [sym, exp] : factors) {
    if (!first) out << '*';
    first = false;
    out << symbol_label(sym);
    if (exp != 1) out << '^' << exp;
  }
  return out.str();
}

}  // namespace gring
