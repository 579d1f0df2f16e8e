#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "homspace/action.hpp"
#include "homspace/errors.hpp"
#include "homspace/measure.hpp"

namespace homspace {

/// The involution phi_x of X sending alpha x to alpha^-1 x.
struct PhiMap {
  PointId base = 0;
  Permutation mapping;
};

/// Certificate that phi_x is not well defined: beta and beta*sigma both move
/// `base` to `y` (sigma fixes `base`), yet their inverses send `base` to
/// different points image1 != image2.
struct IllDefinedWitness {
  PointId base = 0;
  ElementId beta = 0;
  ElementId sigma = 0;
  PointId y = 0;
  PointId image1 = 0;
  PointId image2 = 0;

  /// Re-evaluates the defining relations against the action.
  bool holds(const GroupAction& a) const;
  std::string describe(const GroupAction& a) const;
};

class IllDefined : public Error {
 public:
  explicit IllDefined(IllDefinedWitness w);
  const IllDefinedWitness& witness() const noexcept { return witness_; }

 private:
  IllDefinedWitness witness_;
};

using PhiResult = std::variant<PhiMap, IllDefinedWitness>;

/// Builds phi_x by scanning every group element. When two elements moving x
/// to the same y disagree on where their inverses send x, returns the witness
/// with the smallest (y, beta, sigma). Throws NotTransitive.
PhiResult phi_map(const GroupAction& a, PointId x);
/// phi_map, throwing IllDefined instead of returning a witness.
PhiMap require_phi(const GroupAction& a, PointId x);

struct PhiNormalityRow {
  PointId x = 0;
  bool well_defined = false;
  bool stabilizer_normal = false;
  bool agree() const noexcept { return well_defined == stabilizer_normal; }
};

/// Per point: whether phi_x exists, and whether S(x) is normal in G.
std::vector<PhiNormalityRow> phi_well_defined_iff_normal(const GroupAction& a);

/// Failure of one of the four point-map identities:
///   1: phi_x(x) = x
///   2: phi_x o phi_x = id
///   3: phi_{ax} = phi_a o phi_x o phi_{a^-1}
///   4: phi_{ax} = phi_x o phi_{a^-1 x} o phi_x
struct PropertyFailure {
  int index = 0;
  ElementId alpha = 0;
  PointId y = 0;
};

/// Requires every phi_y to be well defined (throws IllDefined otherwise).
std::optional<PropertyFailure> check_phi_properties(const GroupAction& a, PointId x);

/// Matrices acting on C(X) in the point basis. Permutation operators have
/// exact 0/1 entries.
using LinearOperator = Eigen::MatrixXcd;

/// left:    (M f)(y) = f(alpha y), an anti-homomorphism in alpha.
/// induced: (M f)(y) = f(alpha^-1 y), a homomorphism in alpha.
enum class Convention { left, induced };

const char* to_string(Convention c);

/// The operator f -> f o p.
LinearOperator precomposition_operator(const Permutation& p);
LinearOperator translation_operator(const GroupAction& a, ElementId alpha, Convention convention);

/// First pair (alpha, beta) where the operator map fails to be a homomorphism
/// (induced) or an anti-homomorphism (left), or fails to be a permutation
/// matrix (hence unitary for the uniform measure).
std::optional<std::pair<ElementId, ElementId>> find_translation_failure(const GroupAction& a,
                                                                         Convention convention);

/// U_x f = f o phi_x. Throws IllDefined.
LinearOperator u_operator(const GroupAction& a, PointId x);

/// Failure of one of the operator identities, with L_a f = f o phi_a:
///   1: L_a U_{ax} = U_x L_a
///   2: U_{ax} = U_x U_{a^-1 x} U_x
///   3: L_a U_x = U_x for a in S(x)
struct IdentityFailure {
  int index = 0;
  ElementId alpha = 0;
};

/// Requires every phi_y to be well defined (throws IllDefined otherwise).
std::optional<IdentityFailure> check_operator_identities(const GroupAction& a, PointId x);

/// Exact isometry checks of U_x on the given functions for p in {1, 2, inf}
/// together with integral(U_x f) = integral(f). Returns the index of the first
/// function that fails.
std::optional<std::size_t> check_u_isometry(const GroupAction& a, PointId x, const InvariantMeasure& mu,
                                            const std::vector<Function>& functions);

// ---------------------------------------------------------------- claim probes

struct Certified {};

/// alpha fixes x but moves `support` to `image`, so the indicator of `support`
/// composed with phi_alpha is the indicator of alpha^-1 support != support.
struct StabilizerWitness {
  ElementId alpha = 0;
  PointId x = 0;
  PointId support = 0;
  PointId image = 0;
};

using StabilizerProbe = std::variant<Certified, StabilizerWitness>;

/// Is every point-fixing element the identity map on X? Scans x ascending,
/// then alpha ascending. Throws NotTransitive.
StabilizerProbe stabilizer_invariance_probe(const GroupAction& a);

struct Consistent {
  bool faithful_on_functions = false;
  bool free = false;
};

/// The action on C(X) is faithful but `alpha` != e fixes `x`.
struct FaithfulFreeWitness {
  ElementId alpha = 0;
  PointId x = 0;
};

using FaithfulFreeProbe = std::variant<Consistent, FaithfulFreeWitness>;

/// Checks "faithful on C(X) implies free on X" on this instance. Faithfulness
/// on C(X) is read off the translation operators and cross-checked against
/// point faithfulness (throws InternalError if they disagree).
FaithfulFreeProbe faithful_free_probe(const GroupAction& a);

}  // namespace homspace
