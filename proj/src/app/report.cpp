#include "report.hpp"

namespace homspace::app {

Json to_json(const Permutation& p) {
  Json arr = Json::array();
  for (PointId x : p.images()) arr.push_back(x);
  return arr;
}

Json to_json(const ActionProfile& p) {
  return Json{{"transitive", p.transitive}, {"free", p.free}, {"faithful", p.faithful}, {"orbit_count", p.orbit_count}};
}

Json to_json(const Tolerances& t) {
  return Json{{"ortho", t.ortho}, {"inv", t.inv}, {"rank", t.rank}, {"subspace", t.subspace}, {"eig_cluster", t.eig_cluster}};
}

Json to_json(const InvariantMeasure& m) { return Json(m.to_strings()); }

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Eigen::MatrixXcd& basis) {
  Json cols = Json::array();
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Json col = Json::array();
    for (Eigen::Index r = 0; r < basis.rows(); ++r) col.push_back(to_json(basis(r, c)));
    cols.push_back(std::move(col));
  }
  return cols;
}

Json element_json(const GroupAction& a, ElementId alpha) {
  const Permutation p = a.point_map(alpha);
  return Json{{"index", alpha}, {"action", to_json(p)}, {"cycles", p.to_cycle_string()}};
}

Json witness_json(const GroupAction& a, const IllDefinedWitness& w) {
  return Json{{"beta", element_json(a, w.beta)}, {"sigma", element_json(a, w.sigma)}, {"y", w.y},
              {"image1", w.image1},            {"image2", w.image2},              {"description", w.describe(a)}};
}

Json decomposition_json(const UnitaryRep& r, const Decomposition& d, const DecompositionCheck& check) {
  Json pieces = Json::array();
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    pieces.push_back(Json{{"dim", d.pieces[i].dim()}, {"isotypic_label", d.labels[i]}, {"basis", to_json(d.pieces[i].basis)}});
  Json mult = Json::array();
  for (const auto& [label, m] : d.multiplicities)
    mult.push_back(Json{{"label", label}, {"dim", d.label_dims.at(label)}, {"multiplicity", m}});
  Json out;
  out["convention"] = "induced";
  out["basis_normalization"] = "mu-orthonormal";
  out["degree"] = r.degree();
  out["dims"] = d.dims();
  out["pieces"] = std::move(pieces);
  out["multiplicities"] = std::move(mult);
  out["multiplicity_free"] = d.multiplicity_free();
  out["commutant_dim"] = d.commutant.spectral_rank;
  out["orbital_count"] = d.commutant.orbital_count;
  out["sum_multiplicity_squares"] = d.sum_multiplicity_squares();
  out["rounds"] = d.rounds;
  out["checks"] = Json{{"max_offdiag_gram", check.max_offdiag_gram},
                       {"max_orthonormality", check.max_orthonormality},
                       {"max_invariance", check.max_invariance},
                       {"dim_sum", check.dim_sum},
                       {"all_minimal", check.all_minimal}};
  return out;
}

}  // namespace homspace::app
