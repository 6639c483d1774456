#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace gring {

using Complex = std::complex<double>;

/// Coefficients at or below this magnitude are dropped from ring elements.
inline constexpr double kCoeffEpsilon = 1e-15;

/// A finitely supported element of the complex group ring: a coefficient map
/// over group elements.  All terms of a non-zero element belong to the same
/// group; mixing groups raises DomainError.
class RingElement {
 public:
  RingElement() = default;

  static RingElement basis(const GroupElement& g) {
    RingElement r;
    r.add_term(g, Complex{1.0, 0.0});
    return r;
  }

  const std::map<GroupElement, Complex>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Complex coeff(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Complex{} : it->second;
  }

  /// Accumulate c at g, dropping the term if the result is negligible.
  RingElement& add_term(const GroupElement& g, Complex c);
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& scale(Complex c);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(Complex c, RingElement a) { return a.scale(c); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::map<GroupElement, Complex> terms_;
};

/// Convolution product: (u * v)(g) = sum over h of u(h) v(h^-1 g).
RingElement convolve(const Group& G, const RingElement& u, const RingElement& v);

/// sup |coefficients|; the reference norm for subordination questions.
double sup_norm(const RingElement& w);

/// max |lhs - rhs| over coefficients.
double sup_distance(const RingElement& a, const RingElement& b);

/// max |coefficient| over terms of word length <= window; terms whose length
/// exceeds the window are ignored.  A disengaged window means no restriction.
double windowed_sup_norm(const Group& G, const RingElement& w, std::optional<int> window);

/// Human-readable rendering such as "(2)*e + (-1+2i)*x".
std::string to_string(const Group& G, const RingElement& w);

/// A norm choice: sup, lp:p (p >= 1) or expw:alpha (alpha > 0, the
/// exponentially weighted norm sum |w(g)| * exp(-alpha |g|)).
struct NormSpec {
  enum class Kind { Sup, Lp, ExpWeight };
  Kind kind = Kind::Sup;
  double p = 0.0;
  double alpha = 0.0;

  static NormSpec sup() { return {Kind::Sup, 0.0, 0.0}; }
  static NormSpec lp(double p);
  static NormSpec exp_weight(double alpha);
  static NormSpec parse(const std::string& text);
  std::string str() const;
};

/// Evaluate the norm; the exp-weight kind consults word lengths and may
/// throw OutOfRangeError for table-based groups without a covering ball.
double norm(const Group& G, const RingElement& w, const NormSpec& spec);

struct SubordinationWitnessRow {
  int n = 0;
  GroupElement g;
  double norm_value = 0.0;  ///< candidate norm of exp(alpha n) * basis(g)
  double sup_value = 0.0;   ///< sup norm of the same element
  double ratio = 0.0;       ///< sup / candidate
};

/// Verdict on whether sup is uniformly dominated by the candidate norm:
/// sup_norm(w) <= c * norm(w) for all finitely supported w.
struct SubordinationReport {
  NormSpec spec;
  bool subordinate = false;
  double c = 0.0;           ///< analytic constant when subordinate
  double observed_c = 0.0;  ///< largest ratio sup/candidate seen on the probe ball
  int probe_radius = 0;
  std::vector<SubordinationWitnessRow> witnesses;  ///< growing family when not subordinate
};

SubordinationReport check_subordination(const Group& G, const NormSpec& spec, int probe_radius);

}  // namespace gring
