// Acceptance run over the bundled instances. One PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "homspace/decomposition.hpp"
#include "homspace/phi.hpp"
#include "instance.hpp"

using namespace homspace;
using namespace homspace::app;

namespace {

struct Named {
  std::string file;
  Instance inst;
};

std::string dir;

Instance load(const std::string& file) { return parse_instance_file(dir + "/" + file + ".json"); }

const std::vector<std::string> kCore = {"z4_regular",  "z6_regular", "z12_regular",     "s3_natural",
                                        "s3_regular",  "d4_natural", "q8_center_cosets"};
const std::vector<std::string> kCyclic = {"z4_regular", "z6_regular", "z12_regular"};

std::vector<Named> load_all(const std::vector<std::string>& files) {
  std::vector<Named> out;
  for (const auto& f : files) out.push_back({f, load(f)});
  return out;
}

class Criterion {
 public:
  Criterion(int n, std::string title) : n_(n), title_(std::move(title)) {}

  void require(bool ok, const std::string& what) {
    if (!ok && first_failure_.empty()) first_failure_ = what;
    pass_ = pass_ && ok;
  }

  bool report() const {
    std::printf("%s [%d] %s", pass_ ? "PASS" : "FAIL", n_, title_.c_str());
    if (!pass_) std::printf(" -- %s", first_failure_.c_str());
    std::printf("\n");
    return pass_;
  }

  bool run(const std::function<void(Criterion&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      require(false, std::string("exception: ") + e.what());
    }
    return report();
  }

 private:
  int n_;
  std::string title_;
  bool pass_ = true;
  std::string first_failure_;
};

bool suite_passes(const Instance& inst, const std::string& suite) {
  return verify(inst, suite, RunOptions{}).exit_code == kOk;
}

std::string probe_status(const Instance& inst, const std::string& claim, const RunOptions& opts = {}) {
  return probe(inst, claim, opts).report["probe"]["status"].get<std::string>();
}

Decomposition decompose_default(const UnitaryRep& r) { return decompose(r, RunOptions{}.seed); }

UnitaryRep rep_of(const Instance& inst) { return unitary_rep(inst.action, invariant_measure(inst.action, 0)); }

// 1
void group_and_action(Criterion& c) {
  for (const auto& [file, inst] : load_all(kCore)) {
    c.require(inst.group->check_axioms().ok(), file + ": group axioms");
    c.require(suite_passes(inst, "axioms"), file + ": axioms suite");
    const ElementId order = static_cast<ElementId>(inst.group->order());
    for (PointId x = 0; x < inst.action.degree(); ++x) {
      c.require(orbit(inst.action, x).size() * stabilizer(inst.action, x).order() == order,
                file + ": orbit-stabilizer at x=" + std::to_string(x));
      for (ElementId a = 0; a < order; ++a)
        for (ElementId b = 0; b < order; ++b)
          if (inst.action.act(inst.group->mul(a, b), x) != inst.action.act(a, inst.action.act(b, x)))
            c.require(false, file + ": compatibility");
      if (inst.action.act(inst.group->identity(), x) != x) c.require(false, file + ": identity law");
    }
  }
}

// 2
void measure(Criterion& c) {
  for (const auto& [file, inst] : load_all(kCore)) {
    const auto n = static_cast<long long>(inst.action.degree());
    for (PointId x = 0; x < inst.action.degree(); ++x) {
      const InvariantMeasure mu = invariant_measure(inst.action, x);
      for (const auto& w : mu.weights) c.require(w == Rational(1, n), file + ": uniform weights");
      c.require(verify_invariance(mu, inst.action), file + ": exact invariance");
    }
    c.require(suite_passes(inst, "measure"), file + ": measure suite");
  }
  const Instance two = load("z2_two_orbits");
  c.require(invariant_measure_space_dim(two.action) == 2, "z2_two_orbits: space dim 2");
  c.require(classify(two.action).orbit_count == 2, "z2_two_orbits: two orbits");
}

// 3
void phi_boundary(Criterion& c) {
  for (const auto& [file, inst] : load_all(kCore)) {
    for (const auto& row : phi_well_defined_iff_normal(inst.action))
      c.require(row.agree(), file + ": phi defined iff normal at x=" + std::to_string(row.x));
    const bool expect_defined = file != "s3_natural" && file != "d4_natural";
    for (PointId x = 0; x < inst.action.degree(); ++x) {
      const PhiResult r = phi_map(inst.action, x);
      c.require(std::holds_alternative<PhiMap>(r) == expect_defined, file + ": phi kind");
      if (const auto* w = std::get_if<IllDefinedWitness>(&r)) c.require(w->holds(inst.action), file + ": witness");
    }
    c.require(suite_passes(inst, "phi"), file + ": phi suite");
  }
}

// 4
void identities(Criterion& c) {
  for (const auto& [file, inst] : load_all(kCore)) {
    bool defined = true;
    for (PointId x = 0; x < inst.action.degree(); ++x)
      defined = defined && std::holds_alternative<PhiMap>(phi_map(inst.action, x));
    if (!defined) continue;
    const auto n = static_cast<Eigen::Index>(inst.action.degree());
    std::mt19937_64 rng(1000 + inst.action.degree());
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Function> fs;
    for (int i = 0; i < 100; ++i) {
      Function f(n);
      for (auto& v : f) v = {unit(rng), unit(rng)};
      fs.push_back(std::move(f));
    }
    const InvariantMeasure mu = invariant_measure(inst.action, 0);
    for (PointId x = 0; x < inst.action.degree(); ++x) {
      const std::string at = file + " x=" + std::to_string(x);
      c.require(!check_phi_properties(inst.action, x).has_value(), at + ": phi properties");
      c.require(!check_operator_identities(inst.action, x).has_value(), at + ": operator identities");
      c.require(!check_u_isometry(inst.action, x, mu, fs).has_value(), at + ": isometry");
    }
    c.require(suite_passes(inst, "operators"), file + ": operators suite");
  }
}

// 5
void claim_probes(Criterion& c) {
  for (const std::string file : {"z4_regular", "z6_regular", "z12_regular", "q8_center_cosets"}) {
    const Instance inst = load(file);
    c.require(probe_status(inst, "cor34") == "certified", file + ": cor34 certified");
    c.require(probe_status(inst, "thm44") == "certified", file + ": thm44 certified");
  }
  for (const std::string file : {"z4_regular", "z6_regular", "z12_regular", "s3_regular", "q8_center_cosets"})
    c.require(probe_status(load(file), "thm13") == "consistent", file + ": thm13 consistent");

  const Instance s3 = load("s3_natural");
  const auto is_transposition = [&](const Json& alpha) {
    const std::string cyc = alpha["cycles"].get<std::string>();
    return std::count(cyc.begin(), cyc.end(), '(') == 1 && std::count(cyc.begin(), cyc.end(), ' ') == 1;
  };
  for (const std::string claim : {"cor34", "thm13", "thm44"}) {
    const Outcome o = probe(s3, claim, RunOptions{});
    const Json& p = o.report["probe"];
    c.require(o.exit_code == kWitness && p["status"] == "witness", "s3_natural: " + claim + " witness");
    c.require(!p["alpha"].is_null() && is_transposition(p["alpha"]), "s3_natural: " + claim + " transposition");
  }
  const Json thm44 = probe(s3, "thm44", RunOptions{}).report["probe"];
  c.require(thm44["x"] == 0 && thm44["details"]["dim_h"] == 2, "s3_natural: dim H(0) = 2");
  c.require(h_space(s3.action, 0).dim() == 2, "s3_natural: h_space(0)");
}

// 6
void peter_weyl(Criterion& c) {
  const Tolerances tol;
  for (const auto& [file, inst] : load_all(kCore)) {
    const UnitaryRep r = rep_of(inst);
    const Decomposition d = decompose_default(r);
    const DecompositionCheck chk = check_decomposition(r, d, tol);
    c.require(chk.max_offdiag_gram <= 1e-9, file + ": gram residual");
    c.require(chk.max_invariance <= 1e-8, file + ": invariance residual");
    c.require(chk.dim_sum == inst.action.degree(), file + ": dims sum to |X|");
    c.require(chk.all_minimal, file + ": minimality");
    const std::size_t orbitals = orbital_count(inst.action);
    c.require(d.commutant.spectral_rank == orbitals && d.commutant.orbital_count == orbitals &&
                  d.sum_multiplicity_squares() == orbitals,
              file + ": commutant three-way agreement");
    c.require(suite_passes(inst, "peterweyl"), file + ": peterweyl suite");
  }

  const Instance z4 = load("z4_regular");
  const UnitaryRep r4 = rep_of(z4);
  const Decomposition d4 = decompose_default(r4);
  c.require(d4.dims() == std::vector<std::size_t>{1, 1, 1, 1}, "z4_regular: dims");
  const double pi = std::acos(-1.0);
  for (const Subspace& piece : d4.pieces) {
    double best = 1.0;
    for (int k = 0; k < 4; ++k) {
      Eigen::MatrixXcd chi(4, 1);
      for (PointId y = 0; y < 4; ++y) chi(y, 0) = std::polar(1.0, 2.0 * pi * k * z4.group->label(y)(0) / 4.0);
      best = std::min(best, subspace_distance(r4, piece, Subspace{chi}));
    }
    c.require(best <= 1e-8, "z4_regular: piece is a DFT line");
  }

  c.require(decompose_default(rep_of(load("s3_natural"))).dims() == std::vector<std::size_t>{1, 2},
            "s3_natural: dims {1,2}");
  const Decomposition ds = decompose_default(rep_of(load("s3_regular")));
  c.require(ds.dims() == std::vector<std::size_t>{1, 1, 2, 2}, "s3_regular: dims {1,1,2,2}");
  std::size_t doubled = 0;
  for (const auto& [label, m] : ds.multiplicities) doubled += (m == 2 && ds.label_dims.at(label) == 2) ? 1 : 0;
  c.require(doubled == 1 && ds.multiplicities.size() == 3, "s3_regular: one multiplicity-2 label");
}

// 7
void conjecture(Criterion& c) {
  RunOptions opts;
  opts.trials = 64;
  for (const std::string file : {"z12_regular", "s3_natural"}) {
    const Outcome o = probe(load(file), "conjecture", opts);
    c.require(o.report["probe"]["status"] == "certified", file + ": conjecture certified");
    c.require(o.report["probe"]["details"]["trials"] == 64, file + ": 64 trials");
  }
  const Instance reg = load("s3_regular");
  const UnitaryRep r = rep_of(reg);
  const Decomposition d = decompose_default(r);
  const ConjectureResult res = conjecture_probe(r, d, 64, opts.seed);
  const auto* ce = std::get_if<Counterexample>(&res);
  c.require(ce != nullptr, "s3_regular: counterexample");
  if (ce == nullptr) return;
  c.require(ce->defect >= 0.1, "s3_regular: defect >= 0.1");
  c.require(ce->invariance <= 1e-8, "s3_regular: counterexample is invariant");
  const MatchResult m = subcollection_match(r, ce->subspace, d, 1e-8);
  c.require(std::holds_alternative<NoMatch>(m), "s3_regular: no subcollection matches");
  c.require(probe_status(reg, "conjecture", opts) == "counterexample", "s3_regular: probe status");
}

// 8
void h_space_condition(Criterion& c) {
  for (const auto& file : kCyclic) {
    const Instance inst = load(file);
    const UnitaryRep r = rep_of(inst);
    for (const auto& row : h_space_intersections(r, decompose_default(r)))
      for (std::size_t v : row) c.require(v == 1, file + ": intersection dimension 1");
  }
  const Instance s3 = load("s3_natural");
  const UnitaryRep r = rep_of(s3);
  const Decomposition d = decompose_default(r);
  const auto table = h_space_intersections(r, d);
  bool found = false;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    if (d.pieces[i].dim() != 2) continue;
    found = true;
    for (std::size_t v : table[i]) c.require(v == 1, "s3_natural: standard piece meets H(x) in a line");
  }
  c.require(found, "s3_natural: standard piece present");
}

// 9
void determinism(Criterion& c) {
  for (const std::string file : {"z12_regular", "s3_regular", "q8_center_cosets", "d4_natural"}) {
    const Instance a = load(file);
    const Instance b = load(file);
    const RunOptions opts;
    c.require(decompose_instance(a, opts).report.dump() == decompose_instance(b, opts).report.dump(),
              file + ": decompose report");
    c.require(verify(a, "all", opts).report.dump() == verify(b, "all", opts).report.dump(),
              file + ": verify report");
    c.require(probe(a, "conjecture", opts).report.dump() == probe(b, "conjecture", opts).report.dump(),
              file + ": probe report");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <instances-dir>\n");
    return 1;
  }
  dir = argv[1];
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria = {
      {"group and action axioms, orbit-stabilizer (exact)", group_and_action},
      {"invariant measure uniform and exact, two-orbit space dim", measure},
      {"phi defined iff stabilizer normal", phi_boundary},
      {"phi and U identities, U_x isometry on 100 functions", identities},
      {"claim probes cor34 / thm13 / thm44", claim_probes},
      {"Peter-Weyl decomposition and commutant agreement", peter_weyl},
      {"subcollection conjecture harness", conjecture},
      {"H(x) intersections", h_space_condition},
      {"byte-identical reports", determinism},
  };
  bool all = true;
  int n = 1;
  for (const auto& [title, body] : criteria) all = Criterion(n++, title).run(body) && all;
  return all ? 0 : 1;
}
