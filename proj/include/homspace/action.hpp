#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "homspace/errors.hpp"
#include "homspace/group.hpp"

namespace homspace {

/// A finite group acting on the points {0, ..., degree-1} through a dense table.
///
/// Both axioms are verified exhaustively at construction, so every live
/// GroupAction satisfies act(e, x) = x and act(a, act(b, x)) = act(ab, x).
class GroupAction {
 public:
  /// Throws AxiomViolation with the offending triple, or std::invalid_argument
  /// when the table dimensions or entries are out of range.
  GroupAction(std::shared_ptr<const FiniteGroup> group, std::size_t degree,
              std::vector<std::vector<PointId>> table);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }

  PointId act(ElementId a, PointId x) const { return table_[std::size_t{a} * degree_ + x]; }
  /// The point map of `a` as a permutation of X.
  Permutation point_map(ElementId a) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::size_t degree_;
  std::vector<PointId> table_;
};

struct ActionProfile {
  bool transitive = false;
  bool free = false;
  bool faithful = false;
  std::size_t orbit_count = 0;
};

/// Returns the first axiom violation of a raw table, scanning identity first
/// and then (alpha, beta, x) lexicographically. Entries must already be in range.
std::optional<AxiomViolation> find_axiom_violation(const FiniteGroup& g, std::size_t degree,
                                                   const std::vector<std::vector<PointId>>& table);

GroupAction make_action(std::shared_ptr<const FiniteGroup> g, std::size_t degree,
                        std::vector<std::vector<PointId>> table);

ActionProfile classify(const GroupAction& a);

/// orbit_id[x] numbers the orbits in order of their smallest point.
std::vector<std::size_t> orbit_ids(const GroupAction& a);
/// Orbit of x, sorted.
std::vector<PointId> orbit(const GroupAction& a, PointId x);
/// Throws std::out_of_range when x >= degree.
Subgroup stabilizer(const GroupAction& a, PointId x);
/// Throws NotTransitive unless the action has a single orbit.
void require_transitive(const GroupAction& a);

/// The group acting on itself by left multiplication.
GroupAction regular_action(std::shared_ptr<const FiniteGroup> g);
/// The group acting on the left cosets of `h`; point i is coset i of left_cosets(g, h).
GroupAction coset_action(std::shared_ptr<const FiniteGroup> g, const Subgroup& h);
/// A permutation group acting on the points its labels permute.
/// Throws std::invalid_argument for an unlabelled group.
GroupAction natural_action(std::shared_ptr<const FiniteGroup> g);

}  // namespace homspace
