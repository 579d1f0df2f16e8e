#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homspace {

using ElementId = std::uint32_t;
using PointId = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// Composition follows the left-action convention used throughout the library:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection onto 0..n-1.
  explicit Permutation(std::vector<PointId> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  PointId operator()(PointId x) const { return images_[x]; }
  std::span<const PointId> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// One-line form, e.g. "[1,0,2]".
  std::string to_string() const;
  /// Disjoint-cycle form with fixed points omitted, e.g. "(0 1)", or "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<PointId> images_;
};

/// Result of checking the group axioms of a table; no `failure` means all hold.
struct GroupAxiomReport {
  bool associativity_exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::optional<std::string> failure;
  bool ok() const noexcept { return !failure.has_value(); }
};

/// A finite group given by a dense multiplication table over element indices.
///
/// Immutable after construction. When built from permutations each element
/// carries its permutation image (`label`).
class FiniteGroup {
 public:
  /// Builds from a raw table. Verifies identity and inverses exhaustively and
  /// associativity within `assoc_budget` triples (sampled with `seed` beyond).
  /// Throws std::invalid_argument on any axiom failure.
  static FiniteGroup from_table(std::vector<std::vector<ElementId>> table,
                                std::uint64_t assoc_budget = 1'000'000, std::uint64_t seed = 42);

  std::size_t order() const noexcept { return order_; }
  ElementId identity() const noexcept { return identity_; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[std::size_t{a} * order_ + b]; }
  ElementId inv(ElementId a) const { return inv_[a]; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Permutation realizing the element; only when has_labels().
  const Permutation& label(ElementId a) const { return labels_.at(a); }
  /// Degree of the permutation labels, 0 when unlabelled.
  std::size_t label_degree() const noexcept { return labels_.empty() ? 0 : labels_.front().degree(); }
  /// Index of the element with the given permutation label, if any.
  std::optional<ElementId> find(const Permutation& p) const;

  /// Exact check of identity, inverse and associativity laws.
  GroupAxiomReport check_axioms(std::uint64_t assoc_budget = 1'000'000, std::uint64_t seed = 42) const;

 private:
  friend FiniteGroup group_from_generators(std::size_t, std::span<const Permutation>);
  FiniteGroup() = default;

  std::size_t order_ = 0;
  ElementId identity_ = 0;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::vector<Permutation> labels_;
};

/// Closure of `generators` under composition. Elements are numbered in
/// breadth-first order from the identity (index 0), extending each element
/// by right multiplication with the generators in the given order.
/// Throws std::invalid_argument on degree 0 or a generator of the wrong degree.
FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> generators);

/// A subgroup, stored as the sorted member indices of its parent group.
struct Subgroup {
  std::vector<ElementId> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(ElementId g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Left cosets gH with the smallest element index of each as representative.
/// Cosets are ordered by representative, so the coset of the identity is first.
struct CosetSpace {
  Subgroup subgroup;
  std::vector<std::vector<ElementId>> cosets;
  std::vector<ElementId> representatives;
  /// coset_of[g] = index of the coset containing g.
  std::vector<std::size_t> coset_of;
};

/// Smallest subgroup containing `seeds`. Throws std::out_of_range on a bad index.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const ElementId> seeds);

/// Throws std::invalid_argument unless `h` is a subgroup of `g`.
void validate_subgroup(const FiniteGroup& g, const Subgroup& h);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
CosetSpace left_cosets(const FiniteGroup& g, const Subgroup& h);
/// Intersection of all conjugates gHg^-1: the largest normal subgroup inside H.
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

}  // namespace homspace
