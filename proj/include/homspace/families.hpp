#pragma once

#include <cstddef>
#include <vector>

#include "homspace/group.hpp"

namespace homspace {

/// Named permutation groups. Each is returned with its generators on the
/// points it naturally permutes.
struct NamedGroup {
  std::size_t degree;
  std::vector<Permutation> generators;
};

/// Z_n generated by the n-cycle (0 1 ... n-1).
NamedGroup cyclic(std::size_t n);
/// D_n (order 2n) on the vertices of a regular n-gon, n >= 3.
NamedGroup dihedral(std::size_t n);
/// S_n generated by (0 1) and (0 1 ... n-1).
NamedGroup symmetric(std::size_t n);
/// Q_8 in its left-regular representation. Points 0..7 stand for
/// 1, -1, i, -i, j, -j, k, -k; generators are left multiplication by i and j.
NamedGroup quaternion8();
/// Direct product acting on the disjoint union of the factors' points.
NamedGroup direct_product(const NamedGroup& a, const NamedGroup& b);

FiniteGroup build(const NamedGroup& named);

}  // namespace homspace
