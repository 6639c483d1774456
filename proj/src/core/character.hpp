#pragma once

#include <optional>
#include <variant>

#include "groupoid.hpp"
#include "maps.hpp"

namespace gring {

/// chi(phi) = a(source) - a(target) for a finitely supported coefficient map
/// a; `flipped` negates (matching the commutator-signed derivation d_a).
struct InnerCharacter {
  RingElement a;
  bool flipped = false;
};

/// chi(phi) = f(source) - f(target) for a potential f given on Ball(f_radius)
/// (the value 0 outside when f_radius is disengaged; with a declared radius,
/// evaluation outside it is an error).
struct PotentialCharacter {
  std::map<GroupElement, Complex> f;
  std::optional<int> f_radius;
};

/// chi((u, v)) = t(v) when source(u, v) == z, else 0, for a central element z
/// and a homomorphism t : G -> (C, +).
struct CentralCharacter {
  GroupElement z;
  Homomorphism t;
};

/// An explicit table over morphisms (u, v) with |v| <= v_radius and, when
/// source_radius is engaged, |source| <= source_radius.  Inside the declared
/// domain missing entries read 0; outside it evaluation throws
/// OutOfRangeError.
struct TabulatedCharacter {
  std::map<Morphism, Complex> table;
  int v_radius = 0;
  std::optional<int> source_radius;
};

/// A (candidate) additive character of the adjoint-action groupoid, i.e. a
/// function on morphisms with chi(psi . phi) = chi(psi) + chi(phi).
/// Tabulated data is only a candidate: additivity is checked, not assumed.
class Character {
 public:
  using Data = std::variant<InnerCharacter, PotentialCharacter, CentralCharacter,
                            TabulatedCharacter>;

  static Character inner(RingElement a, bool flipped = false);
  static Character potential(std::map<GroupElement, Complex> f,
                             std::optional<int> f_radius = std::nullopt);
  /// Validates that z is central (commutes with every generator).
  static Character central(const Group& G, GroupElement z, Homomorphism t);
  static Character tabulated(TabulatedCharacter table);

  Complex evaluate(const Group& G, const Morphism& phi) const;
  const Data& data() const { return data_; }
  std::string describe(const Group& G) const;

 private:
  explicit Character(Data data) : data_(std::move(data)) {}
  Data data_;
};

/// Additivity scan over all composable pairs of morphisms with components in
/// Ball(radius).  Pairs whose evaluation leaves a tabulated domain are
/// skipped and counted.  The first violation (in enumeration order) is
/// reported.
struct AdditivityResult {
  bool ok = true;
  long pairs_checked = 0;
  long pairs_skipped = 0;
  struct Violation {
    Morphism psi;
    Morphism phi;
    Complex lhs;
    Complex rhs;
    double defect = 0.0;
  };
  std::optional<Violation> violation;
};

AdditivityResult check_additivity(const Group& G, const Character& chi, int radius, double tol);

/// Quasi-innerness test: chi must vanish on every loop (g t, t) with
/// g, t in Ball(radius).  The first non-vanishing loop is the obstruction.
struct LoopTrivialityResult {
  bool quasi_inner = true;
  long loops_checked = 0;
  struct Obstruction {
    Loop loop;
    Complex value;
  };
  std::optional<Obstruction> obstruction;
};

LoopTrivialityResult is_loop_trivial(const Group& G, const Character& chi, int radius, double tol,
                                     int order_bound = kDefaultOrderBound);

/// For loop-trivial characters, chi is constant on each hom-set Hom(a, b);
/// this scans all morphisms with components in Ball(radius) grouped by
/// (source, target) and compares values.  Not applicable when a loop
/// obstruction exists (the obstruction is returned instead).
struct HomConstancyResult {
  enum class Status { Constant, Counterexample, NotApplicable };
  Status status = Status::Constant;
  long hom_sets_checked = 0;
  long morphisms_checked = 0;
  struct Counterexample {
    Morphism first;
    Morphism second;
    Complex first_value;
    Complex second_value;
  };
  std::optional<Counterexample> counterexample;
  std::optional<LoopTrivialityResult::Obstruction> loop_obstruction;
};

HomConstancyResult check_hom_constancy(const Group& G, const Character& chi, int radius,
                                       double tol);

}  // namespace gring
