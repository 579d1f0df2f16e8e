#pragma once

#include <json.hpp>

#include "homspace/decomposition.hpp"
#include "homspace/phi.hpp"
#include "instance.hpp"

// JSON forms of library values. Complex numbers are [re, im] pairs and bases
// are arrays of columns.

namespace homspace::app {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& p);
Json to_json(const ActionProfile& p);
Json to_json(const Tolerances& t);
Json to_json(const InvariantMeasure& m);
Json to_json(std::complex<double> z);
Json to_json(const Eigen::MatrixXcd& basis);

/// A group element by index, with its permutation of X in one-line and cycle form.
Json element_json(const GroupAction& a, ElementId alpha);

Json witness_json(const GroupAction& a, const IllDefinedWitness& w);

/// {pieces, multiplicities, commutant_dim, orbital_count, ...}; `probes` is
/// attached by the caller.
Json decomposition_json(const UnitaryRep& r, const Decomposition& d, const DecompositionCheck& check);

}  // namespace homspace::app
