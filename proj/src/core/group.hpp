#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gring {

/// The concrete group families shipped with the library.
enum class GroupKind { Free, FreeAbelian, Heisenberg, Cyclic, Dihedral, Symmetric };

/// Parsed form of a group spec string such as "free:2", "heisenberg",
/// "cyclic:6", "dihedral:4" or "symmetric:3".
struct GroupSpec {
  GroupKind kind = GroupKind::Free;
  int param = 0;  ///< rank (free, abelian) or n (cyclic, dihedral, symmetric); 0 for heisenberg

  static GroupSpec parse(const std::string& text);
  std::string str() const;  ///< canonical spec string
};

/// A group element in backend normal form.  `payload` is interpreted by the
/// owning Group: reduced signed letters (free), exponent vectors (abelian),
/// (a, b, c) triples (heisenberg), residues (cyclic), (rotation, flip) pairs
/// (dihedral) or one-line permutation images (symmetric).  `group_key`
/// identifies the owning group so that elements of different groups never
/// compare equal and mixed-group arithmetic can be rejected.
struct GroupElement {
  std::uint32_t group_key = 0;
  std::vector<std::int64_t> payload;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A word-metric ball, sorted by (word length, payload) — graded
/// lexicographic order, so enumeration order is deterministic.
struct Ball {
  int radius = 0;
  bool saturated = false;  ///< the whole (finite) group fits inside this radius
  std::vector<GroupElement> elements;
  std::map<GroupElement, int> lengths;

  bool contains(const GroupElement& g) const { return lengths.count(g) != 0; }
  int length_of(const GroupElement& g) const;
  std::size_t size() const { return elements.size(); }
};

/// Result of a bounded order computation.  Infinite order is never claimed:
/// when no power up to `bound` reaches the identity the order is only
/// reported as exceeding the bound.
struct OrderResult {
  bool finite = false;
  int order = 0;  ///< valid only when finite
  int bound = 0;

  std::string str() const;
};

/// Ball-relative conjugacy partition: elements of Ball(radius) grouped by
/// conjugation with conjugators drawn from Ball(closure_radius).  Classes are
/// ordered by their minimal element and labelled by that representative.
struct ConjugacyPartition {
  int radius = 0;
  int closure_radius = 0;
  std::vector<std::vector<GroupElement>> classes;
  std::vector<std::string> labels;
  std::map<GroupElement, std::size_t> class_index;

  /// Class label of g; throws OutOfRangeError when g lies outside the ball.
  const std::string& label_of(const GroupElement& g) const;
};

inline constexpr std::size_t kDefaultBallBudget = 2'000'000;
inline constexpr int kDefaultOrderBound = 256;

/// A finitely generated group with computable normal forms, the standard
/// generating set of its family, and word-metric enumeration.  Instances are
/// immutable apart from an internal memoised ball cache and are safe to share
/// between threads.
class Group {
 public:
  explicit Group(const GroupSpec& spec, std::size_t ball_budget = kDefaultBallBudget);
  explicit Group(const std::string& spec_text, std::size_t ball_budget = kDefaultBallBudget);

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
  Group(Group&&) noexcept;
  Group& operator=(Group&&) noexcept;
  ~Group();

  const GroupSpec& spec() const { return spec_; }
  std::string spec_str() const { return spec_.str(); }
  std::uint32_t key() const { return key_; }
  bool finite() const;
  std::optional<std::size_t> group_order() const;  ///< set for finite families

  std::size_t generator_count() const { return labels_.size(); }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  GroupElement identity() const;
  GroupElement generator(std::size_t i) const;
  /// Generators and their inverses, deduplicated, in generator order.
  std::vector<GroupElement> symmetric_generators() const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, std::int64_t n) const;
  GroupElement conjugate(const GroupElement& t, const GroupElement& g) const;  ///< t g t^-1
  bool is_identity(const GroupElement& a) const;

  /// Word length over the symmetric generating set.  Closed-form for free,
  /// abelian and cyclic; table lookup otherwise.  For the heisenberg backend
  /// the length must already be covered by an enumerated ball, else
  /// OutOfRangeError is thrown naming the radius that would cover it.
  int word_length(const GroupElement& g) const;

  /// True when |g| <= limit can be decided; requires the cache to cover
  /// `limit` for table-based backends (enumerate_ball(limit) first).
  bool word_length_at_most(const GroupElement& g, int limit) const;

  /// Ball of the given radius, growing the internal cache as needed.
  /// Throws ResourceError when the element-count budget would be exceeded.
  Ball enumerate_ball(int radius) const;

  OrderResult element_order(const GroupElement& g, int bound = kDefaultOrderBound) const;

  /// Elements of Ball(radius) commuting with g.
  std::vector<GroupElement> centralizer_in_ball(const GroupElement& g, int radius) const;

  /// Conjugacy classes of Ball(radius) under conjugators from
  /// Ball(closure_radius); requires closure_radius >= radius.
  ConjugacyPartition conjugacy_classes_in_ball(int radius, int closure_radius) const;

  /// Parse a word such as "x*y^-1*x^2" (or "e") in the group's generators.
  GroupElement parse(const std::string& word) const;
  /// Canonical word for the element; inverse of parse up to normal form.
  std::string str(const GroupElement& g) const;

  /// Number of printable symbols: the generators, plus the derived central
  /// symbol "z" for the heisenberg backend.
  std::size_t symbol_count() const;
  const std::string& symbol_label(std::size_t i) const;
  GroupElement symbol_element(std::size_t i) const;
  /// Canonical factorisation of g as a product of symbol powers; the word
  /// printed by str() and the decomposition used to extend generator maps.
  std::vector<std::pair<std::size_t, std::int64_t>> canonical_factors(const GroupElement& g) const;

  void check_element(const GroupElement& g) const;  ///< throws DomainError on key mismatch

 private:
  using Payload = std::vector<std::int64_t>;
  struct BallCache;

  Payload identity_payload() const;
  Payload mul_payload(const Payload& a, const Payload& b) const;
  Payload inv_payload(const Payload& a) const;
  void validate_payload(const Payload& a) const;
  void ensure_levels(int radius) const;
  void ensure_saturated() const;
  GroupElement wrap(Payload p) const;

  GroupSpec spec_;
  std::uint32_t key_ = 0;
  std::vector<std::string> labels_;
  std::size_t budget_ = kDefaultBallBudget;
  std::unique_ptr<BallCache> cache_;
};

}  // namespace gring
