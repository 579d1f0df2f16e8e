#include "homspace/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "homspace/linalg.hpp"

namespace homspace {

namespace {

using Eigen::MatrixXcd;

/// Uniform double in [-1, 1) from the top 53 bits of a draw.
double symmetric_unit(std::mt19937_64& rng) { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; }

MatrixXcd random_complex(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  MatrixXcd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = symmetric_unit(rng);
      const double im = symmetric_unit(rng);
      m(r, c) = {re, im};
    }
  return m;
}

MatrixXcd random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
  const MatrixXcd x = random_complex(rng, d, d);
  return (x + x.adjoint()) / 2.0;
}

MatrixXcd euclidean(const UnitaryRep& r, const Subspace& s) { return s.basis / r.mu_scale(); }

Subspace from_euclidean(const UnitaryRep& r, const MatrixXcd& e) { return Subspace{e * r.mu_scale()}; }

/// op(alpha) * m using the point map: row y of the result is row p(y) of m.
MatrixXcd apply_op(const UnitaryRep& r, ElementId alpha, const MatrixXcd& m) {
  const Permutation& p = r.point_map(alpha);
  MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index y = 0; y < m.rows(); ++y) out.row(y) = m.row(p(static_cast<PointId>(y)));
  return out;
}

/// sum_k ||e_b^* C_k e_a||_F^2: the dimension of the intertwiner space between
/// the two subrepresentations (an integer up to rounding).
double intertwiner_weight(const CommutantInfo& c, const MatrixXcd& ea, const MatrixXcd& eb) {
  double s = 0.0;
  for (const auto& ck : c.basis) s += (eb.adjoint() * ck * ea).squaredNorm();
  return s;
}

/// Fingerprint for ordering: the first basis vector, quantized.
std::vector<long long> fingerprint(const MatrixXcd& basis) {
  std::vector<long long> fp;
  if (basis.cols() == 0) return fp;
  for (Eigen::Index y = 0; y < basis.rows(); ++y) {
    fp.push_back(std::llround(basis(y, 0).real() * 1e8));
    fp.push_back(std::llround(basis(y, 0).imag() * 1e8));
  }
  return fp;
}

/// Splits span(e) by the eigenspaces of a random Hermitian element of its
/// restricted commutant. Returns a single piece when no split happened.
std::vector<MatrixXcd> split_once(const UnitaryRep& r, const MatrixXcd& e, std::mt19937_64& rng,
                                  const Tolerances& tol) {
  const MatrixXcd h = random_hermitian(rng, e.cols());
  const MatrixXcd lifted = e * h * e.adjoint();
  MatrixXcd a = e.adjoint() * commutant_average(r, lifted) * e;
  a = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const double scale = lambda.cwiseAbs().maxCoeff();

  std::vector<MatrixXcd> parts;
  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= lambda.size(); ++k) {
    if (k == lambda.size() || lambda(k) - lambda(k - 1) > tol.eig_cluster * scale) {
      parts.push_back(e * es.eigenvectors().middleCols(start, k - start));
      start = k;
    }
  }
  return parts;
}

}  // namespace

// ---------------------------------------------------------------- UnitaryRep

double UnitaryRep::mu_scale() const noexcept { return std::sqrt(static_cast<double>(degree())); }

UnitaryRep unitary_rep(const GroupAction& a, const InvariantMeasure& mu) {
  require_transitive(a);
  if (!verify_invariance(mu, a)) throw NotInvariantMeasure();
  for (const auto& w : mu.weights)
    if (w != mu.weights.front()) throw InternalError("invariant measure of a transitive action is not uniform");

  UnitaryRep r(a, mu);
  const FiniteGroup& g = a.group();
  r.maps_.reserve(g.order());
  r.operators_.reserve(g.order());
  for (ElementId alpha = 0; alpha < g.order(); ++alpha) {
    r.maps_.push_back(a.point_map(g.inv(alpha)));
    r.operators_.push_back(precomposition_operator(r.maps_.back()));
  }
  // op(a) op(b) f = f o p_b o p_a, so the homomorphism law reads p_ab = p_b o p_a
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); ++y)
      if (r.maps_[g.mul(x, y)] != r.maps_[y] * r.maps_[x])
        throw InternalError("translation operators are not a homomorphism");
  return r;
}

// ---------------------------------------------------------------- commutant

LinearOperator commutant_average(const UnitaryRep& r, const LinearOperator& m) {
  const auto n = static_cast<Eigen::Index>(r.degree());
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("operator dimension mismatch");
  LinearOperator acc = LinearOperator::Zero(n, n);
  for (ElementId alpha = 0; alpha < r.group_order(); ++alpha) {
    const Permutation& p = r.point_map(alpha);
    for (Eigen::Index z = 0; z < n; ++z)
      for (Eigen::Index y = 0; y < n; ++y) acc(y, z) += m(p(static_cast<PointId>(y)), p(static_cast<PointId>(z)));
  }
  return acc / static_cast<double>(r.group_order());
}

std::size_t orbital_count(const GroupAction& a) {
  const std::size_t n = a.degree();
  std::vector<bool> seen(n * n, false);
  std::size_t count = 0;
  for (PointId i = 0; i < n; ++i)
    for (PointId j = 0; j < n; ++j) {
      if (seen[i * n + j]) continue;
      ++count;
      for (ElementId g = 0; g < a.group().order(); ++g) seen[a.act(g, i) * n + a.act(g, j)] = true;
    }
  return count;
}

CommutantInfo commutant_dimension(const UnitaryRep& r, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(r.degree());
  // column i + n j holds vec(average(e_ij)); entry (y, z) of average(e_ij) is
  // |{a : p_a(y) = i, p_a(z) = j}| / |G|
  Eigen::MatrixXd units = Eigen::MatrixXd::Zero(n * n, n * n);
  const double w = 1.0 / static_cast<double>(r.group_order());
  for (ElementId alpha = 0; alpha < r.group_order(); ++alpha) {
    const Permutation& p = r.point_map(alpha);
    for (Eigen::Index z = 0; z < n; ++z)
      for (Eigen::Index y = 0; y < n; ++y)
        units(y + n * z, p(static_cast<PointId>(y)) + n * p(static_cast<PointId>(z))) += w;
  }
  // `units` is the Frobenius-orthogonal projector onto the commutant, so it is
  // symmetric and its singular values are the absolute eigenvalues
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(units);
  const Eigen::VectorXd s = es.eigenvalues().cwiseAbs();
  const double top = s.size() ? s.maxCoeff() : 0.0;

  CommutantInfo info;
  info.orbital_count = orbital_count(r.action());
  for (Eigen::Index k = s.size() - 1; k >= 0; --k) {
    if (!(s(k) > tol.rank * top)) continue;
    ++info.spectral_rank;
    const Eigen::VectorXd col = es.eigenvectors().col(k);
    info.basis.emplace_back(Eigen::Map<const Eigen::MatrixXd>(col.data(), n, n).cast<std::complex<double>>());
  }
  return info;
}

std::size_t restricted_commutant_dim(const UnitaryRep& r, const CommutantInfo& c, const Subspace& s,
                                     const Tolerances& tol) {
  const MatrixXcd e = euclidean(r, s);
  const Eigen::Index d = e.cols();
  if (d == 0) return 0;
  MatrixXcd stacked(d * d, static_cast<Eigen::Index>(c.basis.size()));
  for (std::size_t k = 0; k < c.basis.size(); ++k) {
    const MatrixXcd block = e.adjoint() * c.basis[k] * e;
    stacked.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXcd>(block.data(), d * d);
  }
  return linalg::numerical_rank(stacked, tol.rank);
}

// ---------------------------------------------------------------- decompose

std::vector<std::size_t> Decomposition::dims() const {
  std::vector<std::size_t> out;
  for (const auto& p : pieces) out.push_back(p.dim());
  return out;
}

std::size_t Decomposition::sum_multiplicity_squares() const {
  std::size_t s = 0;
  for (const auto& [label, m] : multiplicities) s += m * m;
  return s;
}

bool Decomposition::multiplicity_free() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](const auto& kv) { return kv.second == 1; });
}

Decomposition decompose(const UnitaryRep& r, std::uint64_t seed, const DecomposeOptions& options) {
  const Tolerances& tol = options.tol;
  std::mt19937_64 rng(seed);
  Decomposition d;
  d.commutant = commutant_dimension(r, tol);

  const auto n = static_cast<Eigen::Index>(r.degree());
  std::vector<MatrixXcd> pending{MatrixXcd::Identity(n, n)};
  std::vector<MatrixXcd> done;
  int round = 0;
  while (!pending.empty()) {
    if (round == options.max_rounds) throw DecompositionStalled(options.max_rounds);
    ++round;
    std::vector<MatrixXcd> next;
    for (const auto& e : pending) {
      if (restricted_commutant_dim(r, d.commutant, from_euclidean(r, e), tol) == 1) {
        done.push_back(e);
        continue;
      }
      for (auto& part : split_once(r, e, rng, tol)) next.push_back(std::move(part));
    }
    pending = std::move(next);
  }
  d.rounds = round;

  std::vector<std::pair<std::vector<long long>, MatrixXcd>> keyed;
  for (const auto& e : done) {
    MatrixXcd c = linalg::canonical_basis(e);
    keyed.emplace_back(fingerprint(c), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::forward_as_tuple(a.second.cols(), a.first) < std::forward_as_tuple(b.second.cols(), b.first);
  });

  std::size_t next_label = 0;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    std::size_t label = next_label;
    for (std::size_t j = 0; j < i; ++j) {
      if (keyed[j].second.cols() != keyed[i].second.cols()) continue;
      if (intertwiner_weight(d.commutant, keyed[i].second, keyed[j].second) > 0.5) {
        label = d.labels[j];
        break;
      }
    }
    if (label == next_label) ++next_label;
    d.labels.push_back(label);
    ++d.multiplicities[label];
    d.label_dims[label] = static_cast<std::size_t>(keyed[i].second.cols());
    d.pieces.push_back(from_euclidean(r, keyed[i].second));
  }
  return d;
}

// ---------------------------------------------------------------- checks

double invariance_residual(const UnitaryRep& r, const Subspace& s) {
  const MatrixXcd e = euclidean(r, s);
  if (e.cols() == 0) return 0.0;
  double worst = 0.0;
  for (ElementId alpha = 0; alpha < r.group_order(); ++alpha) {
    const MatrixXcd moved = apply_op(r, alpha, e);
    worst = std::max(worst, linalg::spectral_norm(moved - e * (e.adjoint() * moved)));
  }
  return worst;
}

bool DecompositionCheck::ok(const Tolerances& tol) const {
  return dims_match && all_minimal && max_offdiag_gram <= tol.ortho && max_orthonormality <= tol.ortho &&
         max_invariance <= tol.inv;
}

DecompositionCheck check_decomposition(const UnitaryRep& r, const Decomposition& d, const Tolerances& tol) {
  DecompositionCheck c;
  c.all_minimal = true;
  std::vector<MatrixXcd> e;
  for (const auto& p : d.pieces) {
    e.push_back(euclidean(r, p));
    c.dim_sum += p.dim();
    const auto k = static_cast<Eigen::Index>(p.dim());
    c.max_orthonormality =
        std::max(c.max_orthonormality, linalg::spectral_norm(e.back().adjoint() * e.back() - MatrixXcd::Identity(k, k)));
    c.max_invariance = std::max(c.max_invariance, invariance_residual(r, p));
    if (restricted_commutant_dim(r, d.commutant, p, tol) != 1) c.all_minimal = false;
  }
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      c.max_offdiag_gram = std::max(c.max_offdiag_gram, linalg::spectral_norm(e[i].adjoint() * e[j]));
  c.dims_match = c.dim_sum == r.degree();
  return c;
}

// ---------------------------------------------------------------- subspaces

Subspace invariant_subspace_generated(const UnitaryRep& r, const std::vector<Function>& fs, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(r.degree());
  MatrixXcd cols(n, static_cast<Eigen::Index>(fs.size() * r.group_order()));
  Eigen::Index c = 0;
  for (const auto& f : fs) {
    if (f.size() != n) throw std::invalid_argument("function length does not match the action degree");
    for (ElementId alpha = 0; alpha < r.group_order(); ++alpha) cols.col(c++) = apply_op(r, alpha, f);
  }
  const MatrixXcd range = linalg::orthonormal_range(cols, tol.rank);
  return from_euclidean(r, linalg::canonical_basis(range));
}

double subspace_distance(const UnitaryRep& r, const Subspace& a, const Subspace& b) {
  return linalg::projector_distance(euclidean(r, a), euclidean(r, b));
}

Subspace direct_sum(const Decomposition& d, const std::vector<std::size_t>& indices) {
  Eigen::Index rows = d.pieces.empty() ? 0 : d.pieces.front().basis.rows();
  Eigen::Index cols = 0;
  for (std::size_t i : indices) cols += d.pieces.at(i).basis.cols();
  MatrixXcd basis(rows, cols);
  Eigen::Index at = 0;
  for (std::size_t i : indices) {
    basis.middleCols(at, d.pieces[i].basis.cols()) = d.pieces[i].basis;
    at += d.pieces[i].basis.cols();
  }
  return Subspace{std::move(basis)};
}

MatchResult subcollection_match(const UnitaryRep& r, const Subspace& s, const Decomposition& d, double tol) {
  const MatrixXcd es = euclidean(r, s);
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const MatrixXcd ei = euclidean(r, d.pieces[i]);
    const MatrixXcd outside = ei - es * (es.adjoint() * ei);
    if (outside.colwise().norm().maxCoeff() <= tol) selected.push_back(i);
  }
  const Subspace sum = direct_sum(d, selected);
  const double defect = subspace_distance(r, s, Subspace{sum.basis.rows() ? sum.basis : MatrixXcd(es.rows(), 0)});
  if (defect <= tol) return Match{std::move(selected)};
  return NoMatch{std::move(selected), defect};
}

ConjectureResult conjecture_probe(const UnitaryRep& r, const Decomposition& d, std::size_t trials, std::uint64_t seed,
                                  const Tolerances& tol) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(r.degree());
  std::vector<MatrixXcd> e;
  for (const auto& p : d.pieces) e.push_back(euclidean(r, p));

  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t count = 1 + rng() % 2;
    std::vector<Function> fs;
    for (std::size_t k = 0; k < count; ++k) {
      Function f = random_complex(rng, n, 1).col(0);
      if (t % 2 == 0) {
        // sparse random values: keep each point with probability 1/2
        const Eigen::Index keep = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n));
        for (Eigen::Index y = 0; y < n; ++y)
          if (y != keep && (rng() & 1u)) f(y) = 0.0;
      } else {
        // random vector projected onto a random nonempty set of pieces
        Function g = Function::Zero(n);
        const std::size_t forced = rng() % e.size();
        for (std::size_t i = 0; i < e.size(); ++i)
          if (i == forced || (rng() & 1u)) g += e[i] * (e[i].adjoint() * f);
        f = g;
      }
      fs.push_back(std::move(f));
    }
    Subspace s = invariant_subspace_generated(r, fs, tol);
    const MatchResult m = subcollection_match(r, s, d, tol.subspace);
    if (const auto* miss = std::get_if<NoMatch>(&m)) {
      Counterexample ce;
      ce.defect = miss->defect;
      ce.invariance = invariance_residual(r, s);
      ce.subspace = std::move(s);
      ce.from_random_phase = true;
      return ce;
    }
  }

  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < d.pieces.size(); ++j) {
      if (d.labels[i] != d.labels[j]) continue;
      MatrixXcd t;
      double norm = 0.0;
      for (int attempt = 0; attempt < 8 && norm <= 1e-6; ++attempt) {
        const MatrixXcd cross = random_complex(rng, e[j].cols(), e[i].cols());
        t = e[j].adjoint() * commutant_average(r, e[j] * cross * e[i].adjoint()) * e[i];
        norm = linalg::spectral_norm(t);
      }
      if (norm <= 1e-6) throw InternalError("no nonzero intertwiner between equivalent pieces");
      t /= norm;
      const MatrixXcd graph = e[i] + e[j] * t;
      Subspace s = from_euclidean(r, linalg::canonical_basis(linalg::orthonormal_range(graph, tol.rank)));
      const double invariance = invariance_residual(r, s);
      if (invariance > tol.inv) throw InternalError("intertwiner graph is not invariant");
      const MatchResult m = subcollection_match(r, s, d, tol.subspace);
      if (const auto* miss = std::get_if<NoMatch>(&m)) {
        Counterexample ce;
        ce.defect = miss->defect;
        ce.invariance = invariance;
        ce.subspace = std::move(s);
        ce.piece_a = i;
        ce.piece_b = j;
        return ce;
      }
    }
  }
  return ConjectureCertified{trials};
}

// ---------------------------------------------------------------- H(x)

Subspace h_space(const GroupAction& a, PointId x) {
  require_transitive(a);
  const Subgroup sx = stabilizer(a, x);
  const std::size_t n = a.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<PointId>> orbits;
  for (PointId y = 0; y < n; ++y) {
    if (seen[y]) continue;
    std::vector<PointId> orb;
    for (ElementId s : sx.members) {
      const PointId z = a.act(s, y);
      if (!seen[z]) {
        seen[z] = true;
        orb.push_back(z);
      }
    }
    orbits.push_back(std::move(orb));
  }
  MatrixXcd basis = MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(orbits.size()));
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    // the indicator of an orbit O has mu-norm sqrt(|O| / n)
    const double v = std::sqrt(static_cast<double>(n) / static_cast<double>(orbits[k].size()));
    for (PointId z : orbits[k]) basis(z, static_cast<Eigen::Index>(k)) = v;
  }
  return Subspace{std::move(basis)};
}

HSpaceProbe h_space_probe(const GroupAction& a) {
  require_transitive(a);
  for (PointId x = 0; x < a.degree(); ++x) {
    const std::size_t dim = h_space(a, x).dim();
    if (dim != a.degree()) return HSpaceWitness{x, dim, a.degree()};
  }
  return Certified{};
}

std::vector<std::vector<std::size_t>> h_space_intersections(const UnitaryRep& r, const Decomposition& d,
                                                            const Tolerances& tol) {
  std::vector<MatrixXcd> hx;
  for (PointId x = 0; x < r.degree(); ++x) hx.push_back(euclidean(r, h_space(r.action(), x)));
  std::vector<std::vector<std::size_t>> table;
  for (const auto& piece : d.pieces) {
    const MatrixXcd e = euclidean(r, piece);
    std::vector<std::size_t> row;
    for (const auto& h : hx) row.push_back(linalg::intersection_dim(e, h, tol.rank));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace homspace
