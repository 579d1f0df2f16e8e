#pragma once

#include <memory>

#include "homspace/action.hpp"
#include "homspace/families.hpp"
#include "oracle.hpp"

namespace support {

using homspace::FiniteGroup;
using homspace::Permutation;

inline oracle::Perm to_oracle(const Permutation& p) { return oracle::Perm(p.images().begin(), p.images().end()); }

inline Permutation from_oracle(const oracle::Perm& p) {
  return Permutation(std::vector<homspace::PointId>(p.begin(), p.end()));
}

/// The point maps of an action, as a set of oracle permutations.
inline std::set<oracle::Perm> image_set(const homspace::GroupAction& a) {
  std::set<oracle::Perm> out;
  for (homspace::ElementId g = 0; g < a.group().order(); ++g) out.insert(to_oracle(a.point_map(g)));
  return out;
}

inline std::shared_ptr<const FiniteGroup> make(const homspace::NamedGroup& named) {
  return std::make_shared<const FiniteGroup>(homspace::build(named));
}

/// A random permutation group of degree 3..6 with one or two generators.
inline homspace::NamedGroup random_group(std::mt19937_64& rng) {
  const std::size_t n = 3 + rng() % 4;
  homspace::NamedGroup g{n, {}};
  const std::size_t k = 1 + rng() % 2;
  for (std::size_t i = 0; i < k; ++i) g.generators.push_back(from_oracle(oracle::random_perm(rng, n)));
  return g;
}

}  // namespace support
