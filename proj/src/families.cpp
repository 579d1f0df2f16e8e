#include "homspace/families.hpp"

#include <array>
#include <stdexcept>

namespace homspace {

namespace {

Permutation rotation(std::size_t n) {
  std::vector<PointId> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<PointId>((i + 1) % n);
  return Permutation(std::move(img));
}

}  // namespace

NamedGroup cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group needs n >= 1");
  if (n == 1) return {1, {}};
  return {n, {rotation(n)}};
}

NamedGroup dihedral(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<PointId> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<PointId>((n - i) % n);
  return {n, {rotation(n), Permutation(std::move(refl))}};
}

NamedGroup symmetric(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return {1, {}};
  std::vector<PointId> swap01(n);
  for (std::size_t i = 0; i < n; ++i) swap01[i] = static_cast<PointId>(i);
  std::swap(swap01[0], swap01[1]);
  if (n == 2) return {2, {Permutation(std::move(swap01))}};
  return {n, {Permutation(std::move(swap01)), rotation(n)}};
}

NamedGroup quaternion8() {
  // unit quaternion u encoded as 2*basis + sign, basis in {1,i,j,k}
  struct Q {
    int basis;
    int sign;
  };
  // basis product table: e_a * e_b = sign * e_c
  static constexpr std::array<std::array<Q, 4>, 4> table{{
      {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
      {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
      {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
      {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},
  }};
  auto left_mult = [&](int basis) {
    std::vector<PointId> img(8);
    for (int p = 0; p < 8; ++p) {
      int b = p / 2;
      int s = (p % 2) ? -1 : 1;
      Q r = table[basis][b];
      int sign = r.sign * s;
      img[p] = static_cast<PointId>(2 * r.basis + (sign < 0 ? 1 : 0));
    }
    return Permutation(std::move(img));
  };
  return {8, {left_mult(1), left_mult(2)}};
}

NamedGroup direct_product(const NamedGroup& a, const NamedGroup& b) {
  const std::size_t n = a.degree + b.degree;
  NamedGroup out{n, {}};
  for (const auto& s : a.generators) {
    std::vector<PointId> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i < a.degree ? s(static_cast<PointId>(i)) : static_cast<PointId>(i);
    out.generators.emplace_back(std::move(img));
  }
  for (const auto& s : b.generators) {
    std::vector<PointId> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i < a.degree ? static_cast<PointId>(i)
                            : static_cast<PointId>(a.degree + s(static_cast<PointId>(i - a.degree)));
    out.generators.emplace_back(std::move(img));
  }
  return out;
}

FiniteGroup build(const NamedGroup& named) { return group_from_generators(named.degree, named.generators); }

}  // namespace homspace
