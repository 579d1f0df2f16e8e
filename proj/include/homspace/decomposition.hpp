#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "homspace/action.hpp"
#include "homspace/measure.hpp"
#include "homspace/phi.hpp"

namespace homspace {

struct Tolerances {
  double ortho = 1e-9;          ///< pairwise Gram blocks and within-piece orthonormality
  double inv = 1e-8;            ///< invariance residual ||(I - P) L_a P||
  double rank = 1e-7;           ///< relative singular-value cutoff
  double subspace = 1e-8;       ///< projector distance for subspace equality
  double eig_cluster = 1e-8;    ///< relative eigenvalue clustering distance
};

/// The representation alpha -> (f -> f o phi_alpha^-1) on L^2(mu).
///
/// mu must be invariant and the action transitive, which forces mu to be
/// uniform; a basis orthonormal for mu is sqrt(degree) times a Euclidean one.
class UnitaryRep {
 public:
  const GroupAction& action() const noexcept { return action_; }
  const InvariantMeasure& measure() const noexcept { return measure_; }
  std::size_t degree() const noexcept { return action_.degree(); }
  std::size_t group_order() const noexcept { return action_.group().order(); }

  const LinearOperator& op(ElementId alpha) const { return operators_.at(alpha); }
  const std::vector<LinearOperator>& operators() const noexcept { return operators_; }
  /// The point map p with (op(alpha) f)(y) = f(p(y)).
  const Permutation& point_map(ElementId alpha) const { return maps_.at(alpha); }

  /// Factor turning a Euclidean-orthonormal basis into a mu-orthonormal one.
  double mu_scale() const noexcept;

 private:
  friend UnitaryRep unitary_rep(const GroupAction&, const InvariantMeasure&);
  UnitaryRep(GroupAction a, InvariantMeasure mu) : action_(std::move(a)), measure_(std::move(mu)) {}

  GroupAction action_;
  InvariantMeasure measure_;
  std::vector<LinearOperator> operators_;
  std::vector<Permutation> maps_;
};

/// Throws NotTransitive, NotInvariantMeasure, or InternalError if the built
/// operators fail the homomorphism or unitarity checks.
UnitaryRep unitary_rep(const GroupAction& a, const InvariantMeasure& mu);

/// A subspace of C(X) with a basis orthonormal for the mu inner product.
struct Subspace {
  Eigen::MatrixXcd basis;
  std::size_t dim() const noexcept { return static_cast<std::size_t>(basis.cols()); }
};

/// (1/|G|) sum_a L_a M L_a^-1, a projection of M onto the commutant.
LinearOperator commutant_average(const UnitaryRep& r, const LinearOperator& m);

struct CommutantInfo {
  std::size_t spectral_rank = 0;  ///< rank of span{ average(e_ij) }
  std::size_t orbital_count = 0;  ///< exact number of G-orbits on X x X
  /// Frobenius-orthonormal basis of the commutant (spectral_rank matrices).
  std::vector<LinearOperator> basis;
  bool agree() const noexcept { return spectral_rank == orbital_count; }
};

CommutantInfo commutant_dimension(const UnitaryRep& r, const Tolerances& tol = {});

/// Exact count of G-orbits on X x X.
std::size_t orbital_count(const GroupAction& a);

struct DecomposeOptions {
  Tolerances tol;
  int max_rounds = 8;
};

/// Pairwise orthogonal minimal invariant subspaces whose direct sum is C(X).
///
/// Pieces are ordered by dimension, then by a lexicographic fingerprint of
/// their first canonical basis vector. labels[i] groups equivalent pieces;
/// labels are numbered in order of first appearance.
struct Decomposition {
  std::vector<Subspace> pieces;
  std::vector<std::size_t> labels;
  /// label -> number of pieces carrying it.
  std::map<std::size_t, std::size_t> multiplicities;
  /// label -> dimension of its pieces.
  std::map<std::size_t, std::size_t> label_dims;
  CommutantInfo commutant;
  int rounds = 0;

  std::vector<std::size_t> dims() const;
  /// sum over labels of multiplicity squared.
  std::size_t sum_multiplicity_squares() const;
  bool multiplicity_free() const;
};

/// Splits C(X) with eigenspaces of random Hermitian commutant elements drawn
/// from `seed`, re-splitting until every piece has a one-dimensional
/// restricted commutant. Throws DecompositionStalled after max_rounds.
Decomposition decompose(const UnitaryRep& r, std::uint64_t seed, const DecomposeOptions& options = {});

/// Dimension of the commutant of the subrepresentation on span(basis).
std::size_t restricted_commutant_dim(const UnitaryRep& r, const CommutantInfo& c, const Subspace& s,
                                     const Tolerances& tol = {});

/// Worst residuals of a decomposition against its defining properties.
struct DecompositionCheck {
  double max_offdiag_gram = 0.0;
  double max_orthonormality = 0.0;
  double max_invariance = 0.0;
  std::size_t dim_sum = 0;
  bool dims_match = false;
  bool all_minimal = false;
  bool ok(const Tolerances& tol) const;
};

DecompositionCheck check_decomposition(const UnitaryRep& r, const Decomposition& d, const Tolerances& tol = {});

/// Largest ||(I - P) L_a P|| over the group, for a mu-orthonormal basis.
double invariance_residual(const UnitaryRep& r, const Subspace& s);

/// Orthonormal basis of span{ L_a f : a in G, f in fs }; dimension 0 for all-zero input.
Subspace invariant_subspace_generated(const UnitaryRep& r, const std::vector<Function>& fs,
                                      const Tolerances& tol = {});

/// mu-projector distance between two subspaces.
double subspace_distance(const UnitaryRep& r, const Subspace& a, const Subspace& b);

/// Direct sum of the selected pieces.
Subspace direct_sum(const Decomposition& d, const std::vector<std::size_t>& indices);

struct Match {
  std::vector<std::size_t> indices;
};
struct NoMatch {
  std::vector<std::size_t> selected;
  double defect = 0.0;  ///< projector distance between S and the selected sum
};
using MatchResult = std::variant<Match, NoMatch>;

/// Greedily selects the pieces lying inside S (every basis vector b with
/// ||P_S b - b|| <= tol) and reports whether their sum is S.
MatchResult subcollection_match(const UnitaryRep& r, const Subspace& s, const Decomposition& d, double tol);

struct ConjectureCertified {
  std::size_t trials = 0;
};
struct Counterexample {
  Subspace subspace;
  std::size_t piece_a = 0;  ///< the graph is {v + T v : v in piece_a}
  std::size_t piece_b = 0;
  double defect = 0.0;
  double invariance = 0.0;
  bool from_random_phase = false;
};
using ConjectureResult = std::variant<ConjectureCertified, Counterexample>;

/// Tests the subcollection property on `trials` random invariant subspaces,
/// then, if some multiplicity is at least 2, on the graph of a nonzero
/// intertwiner between two equivalent pieces.
ConjectureResult conjecture_probe(const UnitaryRep& r, const Decomposition& d, std::size_t trials,
                                  std::uint64_t seed, const Tolerances& tol = {});

/// Functions fixed by every f -> f o phi_a with a in S(x): the functions
/// constant on each S(x)-orbit. Basis: normalized orbit indicators, in order of
/// each orbit's smallest point. Throws NotTransitive.
Subspace h_space(const GroupAction& a, PointId x);

struct HSpaceWitness {
  PointId x = 0;
  std::size_t dim = 0;
  std::size_t degree = 0;
};
using HSpaceProbe = std::variant<Certified, HSpaceWitness>;

/// Certified iff H(x) is all of C(X) for every x.
HSpaceProbe h_space_probe(const GroupAction& a);

/// table[i][x] = dim(pieces[i] ∩ H(x)), counting principal angles whose sine
/// is at most tol.rank.
std::vector<std::vector<std::size_t>> h_space_intersections(const UnitaryRep& r, const Decomposition& d,
                                                       const Tolerances& tol = {});

}  // namespace homspace
