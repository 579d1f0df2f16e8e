#include "homspace/phi.hpp"

#include <limits>
#include <sstream>

namespace homspace {

namespace {

bool exactly_equal(const LinearOperator& a, const LinearOperator& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

bool is_permutation_matrix(const LinearOperator& m) {
  if (m.rows() != m.cols()) return false;
  const Eigen::Index n = m.rows();
  std::vector<int> col_hits(static_cast<std::size_t>(n), 0);
  for (Eigen::Index r = 0; r < n; ++r) {
    int row_hits = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto v = m(r, c);
      if (v == std::complex<double>(1.0, 0.0)) {
        ++row_hits;
        ++col_hits[static_cast<std::size_t>(c)];
      } else if (v != std::complex<double>(0.0, 0.0)) {
        return false;
      }
    }
    if (row_hits != 1) return false;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

std::vector<Permutation> all_phis(const GroupAction& a) {
  std::vector<Permutation> phis;
  phis.reserve(a.degree());
  for (PointId y = 0; y < a.degree(); ++y) phis.push_back(require_phi(a, y).mapping);
  return phis;
}

}  // namespace

// ---------------------------------------------------------------- phi maps

bool IllDefinedWitness::holds(const GroupAction& a) const {
  const FiniteGroup& g = a.group();
  if (beta >= g.order() || sigma >= g.order() || base >= a.degree()) return false;
  const ElementId bs = g.mul(beta, sigma);
  return a.act(sigma, base) == base && a.act(beta, base) == y && a.act(bs, base) == y &&
         a.act(g.inv(beta), base) == image1 && a.act(g.inv(bs), base) == image2 && image1 != image2;
}

std::string IllDefinedWitness::describe(const GroupAction& a) const {
  std::ostringstream os;
  auto name = [&](ElementId e) {
    return a.group().has_labels() ? a.group().label(e).to_cycle_string() : "#" + std::to_string(e);
  };
  os << "beta=" << name(beta) << " and beta*sigma with sigma=" << name(sigma) << " in S(" << base << ") both send "
     << base << " to " << y << ", but their inverses send " << base << " to " << image1 << " and " << image2;
  return os.str();
}

IllDefined::IllDefined(IllDefinedWitness w)
    : Error("phi_" + std::to_string(w.base) + " is not well defined (y=" + std::to_string(w.y) + ")"),
      witness_(w) {}

PhiResult phi_map(const GroupAction& a, PointId x) {
  require_transitive(a);
  if (x >= a.degree()) throw std::out_of_range("point out of range");
  const FiniteGroup& g = a.group();
  const Subgroup sx = stabilizer(a, x);

  // group elements by where they send x; ascending element order within each
  std::vector<std::vector<ElementId>> movers(a.degree());
  for (ElementId beta = 0; beta < g.order(); ++beta) movers[a.act(beta, x)].push_back(beta);

  std::vector<PointId> images(a.degree());
  for (PointId y = 0; y < a.degree(); ++y) {
    for (ElementId beta : movers[y]) {
      const PointId img1 = a.act(g.inv(beta), x);
      for (ElementId sigma : sx.members) {
        const PointId img2 = a.act(g.inv(g.mul(beta, sigma)), x);
        if (img1 != img2) {
          IllDefinedWitness w{x, beta, sigma, y, img1, img2};
          if (!w.holds(a)) throw InternalError("constructed ill-definedness witness does not hold");
          return w;
        }
      }
    }
    images[y] = a.act(g.inv(movers[y].front()), x);
  }
  return PhiMap{x, Permutation(std::move(images))};
}

PhiMap require_phi(const GroupAction& a, PointId x) {
  auto r = phi_map(a, x);
  if (auto* w = std::get_if<IllDefinedWitness>(&r)) throw IllDefined(*w);
  return std::get<PhiMap>(std::move(r));
}

std::vector<PhiNormalityRow> phi_well_defined_iff_normal(const GroupAction& a) {
  require_transitive(a);
  std::vector<PhiNormalityRow> rows;
  for (PointId x = 0; x < a.degree(); ++x) {
    PhiNormalityRow row;
    row.x = x;
    row.well_defined = std::holds_alternative<PhiMap>(phi_map(a, x));
    row.stabilizer_normal = is_normal(a.group(), stabilizer(a, x));
    rows.push_back(row);
  }
  return rows;
}

std::optional<PropertyFailure> check_phi_properties(const GroupAction& a, PointId x) {
  const auto phi = all_phis(a);
  const FiniteGroup& g = a.group();
  const Permutation& px = phi[x];
  const ElementId e = g.identity();

  if (px(x) != x) return PropertyFailure{1, e, x};
  for (PointId y = 0; y < a.degree(); ++y)
    if (px(px(y)) != y) return PropertyFailure{2, e, y};

  for (ElementId alpha = 0; alpha < g.order(); ++alpha) {
    const ElementId inv = g.inv(alpha);
    const Permutation& moved = phi[a.act(alpha, x)];
    for (PointId y = 0; y < a.degree(); ++y)
      if (moved(y) != a.act(alpha, px(a.act(inv, y)))) return PropertyFailure{3, alpha, y};
  }
  for (ElementId alpha = 0; alpha < g.order(); ++alpha) {
    const Permutation& moved = phi[a.act(alpha, x)];
    const Permutation& back = phi[a.act(g.inv(alpha), x)];
    for (PointId y = 0; y < a.degree(); ++y)
      if (moved(y) != px(back(px(y)))) return PropertyFailure{4, alpha, y};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- operators

const char* to_string(Convention c) { return c == Convention::left ? "left" : "induced"; }

LinearOperator precomposition_operator(const Permutation& p) {
  const auto n = static_cast<Eigen::Index>(p.degree());
  LinearOperator m = LinearOperator::Zero(n, n);
  for (Eigen::Index y = 0; y < n; ++y) m(y, p(static_cast<PointId>(y))) = 1.0;
  return m;
}

LinearOperator translation_operator(const GroupAction& a, ElementId alpha, Convention convention) {
  if (alpha >= a.group().order()) throw std::out_of_range("element index out of range");
  const ElementId e = convention == Convention::left ? alpha : a.group().inv(alpha);
  return precomposition_operator(a.point_map(e));
}

std::optional<std::pair<ElementId, ElementId>> find_translation_failure(const GroupAction& a,
                                                                         Convention convention) {
  const FiniteGroup& g = a.group();
  std::vector<LinearOperator> ops;
  ops.reserve(g.order());
  for (ElementId alpha = 0; alpha < g.order(); ++alpha) {
    ops.push_back(translation_operator(a, alpha, convention));
    if (!is_permutation_matrix(ops.back())) return std::make_pair(alpha, alpha);
  }
  for (ElementId alpha = 0; alpha < g.order(); ++alpha)
    for (ElementId beta = 0; beta < g.order(); ++beta) {
      const ElementId prod = convention == Convention::induced ? g.mul(alpha, beta) : g.mul(beta, alpha);
      if (!exactly_equal(ops[alpha] * ops[beta], ops[prod])) return std::make_pair(alpha, beta);
    }
  return std::nullopt;
}

LinearOperator u_operator(const GroupAction& a, PointId x) {
  return precomposition_operator(require_phi(a, x).mapping);
}

std::optional<IdentityFailure> check_operator_identities(const GroupAction& a, PointId x) {
  const auto phi = all_phis(a);
  const FiniteGroup& g = a.group();
  std::vector<LinearOperator> u;
  u.reserve(phi.size());
  for (const auto& p : phi) u.push_back(precomposition_operator(p));
  const LinearOperator& ux = u[x];

  for (ElementId alpha = 0; alpha < g.order(); ++alpha) {
    const LinearOperator l = translation_operator(a, alpha, Convention::left);
    const LinearOperator& u_moved = u[a.act(alpha, x)];
    if (!exactly_equal(l * u_moved, ux * l)) return IdentityFailure{1, alpha};
    if (!exactly_equal(u_moved, ux * u[a.act(g.inv(alpha), x)] * ux)) return IdentityFailure{2, alpha};
    if (a.act(alpha, x) == x && !exactly_equal(l * ux, ux)) return IdentityFailure{3, alpha};
  }
  return std::nullopt;
}

std::optional<std::size_t> check_u_isometry(const GroupAction& a, PointId x, const InvariantMeasure& mu,
                                            const std::vector<Function>& functions) {
  const LinearOperator u = u_operator(a, x);
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const Function& f = functions[i];
    const Function uf = u * f;
    for (double p : {1.0, 2.0, inf})
      if (lp_norm(uf, p, mu) != lp_norm(f, p, mu)) return i;
    if (integral(uf, mu) != integral(f, mu)) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- probes

StabilizerProbe stabilizer_invariance_probe(const GroupAction& a) {
  require_transitive(a);
  const FiniteGroup& g = a.group();
  for (PointId x = 0; x < a.degree(); ++x) {
    for (ElementId alpha : stabilizer(a, x).members) {
      for (PointId y = 0; y < a.degree(); ++y)
        if (a.act(alpha, y) != y) return StabilizerWitness{alpha, x, y, a.act(g.inv(alpha), y)};
    }
  }
  return Certified{};
}

FaithfulFreeProbe faithful_free_probe(const GroupAction& a) {
  require_transitive(a);
  const FiniteGroup& g = a.group();
  const auto n = static_cast<Eigen::Index>(a.degree());
  const LinearOperator id = LinearOperator::Identity(n, n);
  bool faithful_on_functions = true;
  for (ElementId alpha = 0; alpha < g.order(); ++alpha)
    if (alpha != g.identity() && exactly_equal(translation_operator(a, alpha, Convention::induced), id))
      faithful_on_functions = false;

  const ActionProfile profile = classify(a);
  // indicator functions separate points, so the two notions of faithfulness coincide
  if (faithful_on_functions != profile.faithful)
    throw InternalError("operator faithfulness disagrees with point faithfulness");

  if (faithful_on_functions && !profile.free) {
    for (PointId x = 0; x < a.degree(); ++x)
      for (ElementId alpha : stabilizer(a, x).members)
        if (alpha != g.identity()) return FaithfulFreeWitness{alpha, x};
  }
  return Consistent{faithful_on_functions, profile.free};
}

}  // namespace homspace
