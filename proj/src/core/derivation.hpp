#pragma once

#include <optional>

#include "character.hpp"

namespace gring {

/// How a derivation table was produced; carried through reports.
enum class Provenance { Inner, Central, Potential, FromCharacter, SigmaTauInner, Custom };

std::string provenance_name(Provenance p);

/// A (possibly twisted) derivation of the group ring, represented by its
/// values d(g) on the basis elements g of Ball(domain_radius).  Values are
/// exact when trunc_radius is disengaged; otherwise each d(g) only carries
/// the coefficients at g * t with |t| <= trunc_radius and nothing is claimed
/// beyond that window.
///
/// The sign convention for inner derivations is d_a(x) = x a - a x, matching
/// the inner character a(source) - a(target); `flipped` selects a x - x a.
class Derivation {
 public:
  static Derivation custom(
      const Group& G, std::map<GroupElement, RingElement> basis, int domain_radius,
      std::optional<int> trunc_radius, Provenance provenance = Provenance::Custom,
      std::optional<std::pair<EndomorphismSpec, EndomorphismSpec>> twists = std::nullopt);

  const std::map<GroupElement, RingElement>& basis() const { return basis_; }
  int domain_radius() const { return domain_radius_; }
  std::optional<int> trunc_radius() const { return trunc_radius_; }
  bool exact() const { return !trunc_radius_.has_value(); }
  Provenance provenance() const { return provenance_; }
  const std::optional<std::pair<EndomorphismSpec, EndomorphismSpec>>& twists() const {
    return twists_;
  }

  /// d(g) for |g| <= domain_radius; OutOfRangeError beyond.
  const RingElement& value(const Group& G, const GroupElement& g) const;

 private:
  std::map<GroupElement, RingElement> basis_;  // non-zero values only
  std::map<GroupElement, int> domain_;          // every element of the domain ball
  int domain_radius_ = 0;
  std::optional<int> trunc_radius_;
  Provenance provenance_ = Provenance::Custom;
  std::optional<std::pair<EndomorphismSpec, EndomorphismSpec>> twists_;
};

/// d_a(x) = x a - a x (or a x - x a when flipped); exact.
Derivation inner_derivation(const Group& G, const RingElement& a, int domain_radius,
                            bool flipped = false);

/// d(g) = t(g) * g z for a central element z and homomorphism t; exact.
/// Throws DomainError when z is not central.
Derivation central_derivation(const Group& G, const GroupElement& z, const Homomorphism& t,
                              int domain_radius);

/// d(g) = sum over |t| <= trunc_radius of chi((g t, g)) * (g t); the
/// derivation realised by a groupoid character, truncated to the window.
Derivation derivation_from_character(const Group& G, const Character& chi, int domain_radius,
                                     int trunc_radius);

/// Derivation of the potential character f(source) - f(target).
Derivation potential_derivation(const Group& G, const std::map<GroupElement, Complex>& f,
                                int domain_radius, int trunc_radius,
                                std::optional<int> f_radius = std::nullopt);

/// Twisted inner derivation d(x) = a sigma(x) - tau(x) a; a
/// (sigma, tau)-derivation, exact.  With sigma = tau = id this is the
/// negative of the plain inner convention, i.e. it equals
/// inner_derivation(G, a, r, /*flipped=*/true).
Derivation sigma_tau_inner_derivation(const Group& G, const RingElement& a,
                                      const EndomorphismSpec& sigma, const EndomorphismSpec& tau,
                                      int domain_radius);

/// Linear extension: d(w) = sum w(g) d(g).  Every support point of w must lie
/// in the domain ball.
RingElement apply(const Group& G, const Derivation& d, const RingElement& w);

/// The tabulated character chi((u, v)) = coefficient of u in d(v), with
/// v_radius = domain_radius and source_radius = trunc_radius (unrestricted
/// for exact derivations).
Character character_of_derivation(const Group& G, const Derivation& d);

/// Windowed Leibniz defect at a pair (u, v):
///   || d(uv) - d(u) v - u d(v) ||  restricted to coefficients of length <= window.
/// For truncated tables the comparison is only sound for
/// window <= trunc_radius - |u| - |v|; `sound` records whether the supplied
/// window satisfies that bound (exact tables are always sound).
struct DefectResult {
  double defect = 0.0;
  std::optional<int> window;
  std::optional<int> sound_window;  ///< largest sound window, when truncated
  bool sound = true;
  std::string note;
};

DefectResult leibniz_defect(const Group& G, const Derivation& d, const GroupElement& u,
                            const GroupElement& v, std::optional<int> window = std::nullopt);

/// Twisted variant: || d(uv) - d(u) sigma(v) - tau(u) d(v) || with the
/// analogous sound window trunc_radius - max(|uv|, |u|+|sigma(v)|, |tau(u)|+|v|).
DefectResult twisted_leibniz_defect(const Group& G, const Derivation& d,
                                    const EndomorphismSpec& sigma, const EndomorphismSpec& tau,
                                    const GroupElement& u, const GroupElement& v,
                                    std::optional<int> window = std::nullopt);

/// Scan the defect over all pairs u, v in Ball(radius); when the derivation
/// carries twists they are used automatically.  Reports the worst pair.
struct LeibnizScanResult {
  double max_defect = 0.0;
  long pairs_checked = 0;
  long pairs_skipped = 0;  ///< pairs leaving the domain ball or with no sound window
  bool all_sound = true;
  std::optional<std::pair<GroupElement, GroupElement>> worst_pair;
  std::optional<int> window;  ///< as supplied; per-pair sound windows are used when absent
};

LeibnizScanResult leibniz_scan(const Group& G, const Derivation& d, int radius,
                               std::optional<int> window = std::nullopt);

}  // namespace gring
