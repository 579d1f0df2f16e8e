#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "homspace/linalg.hpp"

namespace homspace::app {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& name) {
    if (!on_) return;
    const auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }
  void attach(Json& report) const {
    if (on_) report["timings_ms"] = laps_;
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
  Json laps_ = Json::object();
};

Json envelope(const Instance& inst, const RunOptions& opts, const std::string& command) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["seed"] = opts.seed;
  j["tolerances"] = to_json(opts.tol);
  j["command"] = command;
  j["instance"] = Json{{"name", inst.name}, {"spec", inst.source}};
  return j;
}

double symmetric_unit(std::mt19937_64& rng) { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; }

Function random_function(std::mt19937_64& rng, std::size_t n) {
  Function f(static_cast<Eigen::Index>(n));
  for (auto& v : f) {
    const double re = symmetric_unit(rng);
    const double im = symmetric_unit(rng);
    v = {re, im};
  }
  return f;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- analyze

Json group_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["permutation_degree"] = g.label_degree();
  return j;
}

Json measure_json(const GroupAction& a, const ActionProfile& profile) {
  Json j;
  j["space_dim"] = invariant_measure_space_dim(a);
  if (!profile.transitive) {
    j["weights"] = nullptr;
    j["note"] = "not transitive: no unique invariant probability measure";
    return j;
  }
  const InvariantMeasure mu = invariant_measure(a, 0);
  bool base_independent = true;
  for (PointId x = 1; x < a.degree(); ++x) base_independent = base_independent && invariant_measure(a, x) == mu;
  j["weights"] = to_json(mu);
  j["invariant"] = verify_invariance(mu, a);
  j["base_independent"] = base_independent;
  return j;
}

Json phi_json(const GroupAction& a) {
  Json points = Json::array();
  bool all = true;
  for (const auto& row : phi_well_defined_iff_normal(a)) {
    Json p;
    p["x"] = row.x;
    p["well_defined"] = row.well_defined;
    p["stabilizer_normal"] = row.stabilizer_normal;
    p["stabilizer_order"] = stabilizer(a, row.x).order();
    const PhiResult r = phi_map(a, row.x);
    if (const auto* m = std::get_if<PhiMap>(&r))
      p["mapping"] = to_json(m->mapping);
    else
      p["witness"] = witness_json(a, std::get<IllDefinedWitness>(r));
    all = all && row.well_defined;
    points.push_back(std::move(p));
  }
  return Json{{"all_well_defined", all}, {"points", std::move(points)}};
}

void fill_analysis(const Instance& inst, Json& report, std::vector<std::string>& summary) {
  const GroupAction& a = inst.action;
  const ActionProfile profile = classify(a);
  report["group"] = group_json(a.group());
  report["degree"] = a.degree();
  report["profile"] = to_json(profile);
  report["measure"] = measure_json(a, profile);
  std::ostringstream line;
  line << inst.name << ": |G|=" << a.group().order() << " |X|=" << a.degree() << " transitive=" << profile.transitive
       << " free=" << profile.free << " faithful=" << profile.faithful << " orbits=" << profile.orbit_count;
  summary.push_back(line.str());
  if (profile.transitive) {
    report["phi"] = phi_json(a);
    summary.push_back(std::string("phi well defined at every point: ") +
                      (report["phi"]["all_well_defined"].get<bool>() ? "yes" : "no"));
  } else {
    report["phi"] = Json{{"skipped", "not transitive"}};
  }
}

// ---------------------------------------------------------------- verify

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& what, bool pass, const std::string& detail = {}) {
    Json c{{"name", what}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(std::move(c));
    failed_ = failed_ || !pass;
  }
  void skip(const std::string& reason) { skipped_ = reason; }
  void note(const std::string& text) { notes_.push_back(text); }
  bool failed() const { return failed_; }

  Json json() const {
    Json j{{"suite", name_}};
    if (!skipped_.empty()) {
      j["status"] = "skipped";
      j["reason"] = skipped_;
      return j;
    }
    j["status"] = failed_ ? "fail" : "pass";
    j["checks"] = checks_;
    if (!notes_.empty()) j["notes"] = notes_;
    return j;
  }
  std::string line() const {
    if (!skipped_.empty()) return name_ + ": skipped (" + skipped_ + ")";
    std::string s = name_ + ": " + (failed_ ? "FAIL" : "pass") + " (" + std::to_string(checks_.size()) + " checks)";
    for (const auto& c : checks_)
      if (!c["pass"].get<bool>()) s += "\n  failed: " + c["name"].get<std::string>();
    return s;
  }

 private:
  std::string name_;
  Json checks_ = Json::array();
  std::vector<std::string> notes_;
  std::string skipped_;
  bool failed_ = false;
};

std::vector<std::vector<PointId>> action_table(const GroupAction& a) {
  std::vector<std::vector<PointId>> t(a.group().order(), std::vector<PointId>(a.degree()));
  for (ElementId g = 0; g < a.group().order(); ++g)
    for (PointId x = 0; x < a.degree(); ++x) t[g][x] = a.act(g, x);
  return t;
}

Subgroup conjugate(const FiniteGroup& g, ElementId by, const Subgroup& h) {
  Subgroup out;
  for (ElementId m : h.members) out.members.push_back(g.mul(g.mul(by, m), g.inv(by)));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

Suite suite_axioms(const Instance& inst, const RunOptions& opts) {
  Suite s("axioms");
  const GroupAction& a = inst.action;
  const FiniteGroup& g = a.group();
  const GroupAxiomReport gr = g.check_axioms(1'000'000, opts.seed);
  s.check("group axioms (identity, inverses, associativity)", gr.ok(),
          gr.failure.value_or(gr.associativity_exhaustive ? "associativity exhaustive"
                                                          : "associativity sampled on " +
                                                                std::to_string(gr.triples_checked) + " triples"));
  const auto violation = find_axiom_violation(g, a.degree(), action_table(a));
  s.check("action axioms", !violation.has_value(), violation ? violation->what() : "");

  const ActionProfile p = classify(a);
  s.check("profile consistency (free implies faithful, transitive iff one orbit)",
          (!p.free || p.faithful) && (p.transitive == (p.orbit_count == 1)));

  bool orbit_stab = true;
  bool lagrange = true;
  bool core = true;
  for (PointId x = 0; x < a.degree(); ++x) {
    const Subgroup sx = stabilizer(a, x);
    orbit_stab = orbit_stab && orbit(a, x).size() * sx.order() == g.order();
    const CosetSpace cs = left_cosets(g, sx);
    std::size_t covered = 0;
    for (const auto& c : cs.cosets) covered += c.size();
    lagrange = lagrange && cs.cosets.size() * sx.order() == g.order() && covered == g.order();
    core = core && is_normal(g, sx) == (normal_core(g, sx) == sx);
  }
  s.check("orbit-stabilizer |orbit(x)| |S(x)| = |G|", orbit_stab);
  s.check("Lagrange on every stabilizer", lagrange);
  s.check("normal iff equal to its normal core, on every stabilizer", core);
  if (a.degree() <= 50) {
    bool conj = true;
    for (PointId x = 0; x < a.degree(); ++x) {
      const Subgroup sx = stabilizer(a, x);
      for (ElementId alpha = 0; alpha < g.order(); ++alpha)
        conj = conj && stabilizer(a, a.act(alpha, x)) == conjugate(g, alpha, sx);
    }
    s.check("stabilizers along an orbit are conjugate", conj);
  } else {
    s.note("stabilizer conjugacy skipped above degree 50");
  }
  return s;
}

Suite suite_measure(const Instance& inst) {
  Suite s("measure");
  const GroupAction& a = inst.action;
  const InvariantMeasure h = haar(a.group());
  Rational total = 0;
  for (const auto& w : h.weights) total += w;
  s.check("Haar measure sums to 1", total == 1);
  s.check("Haar measure invariant under left and right translation and inversion",
          bi_invariant_and_symmetric(a.group(), h));
  const ActionProfile p = classify(a);
  const std::size_t dim = invariant_measure_space_dim(a);
  s.check("invariant measure space dimension equals orbit count", dim == p.orbit_count,
          std::to_string(dim) + " vs " + std::to_string(p.orbit_count));
  if (!p.transitive) {
    s.note("invariant_measure needs a transitive action; per-base checks skipped");
    return s;
  }
  const Rational uniform(1, static_cast<long long>(a.degree()));
  bool all_uniform = true;
  bool all_invariant = true;
  for (PointId x = 0; x < a.degree(); ++x) {
    const InvariantMeasure mu = invariant_measure(a, x);
    for (const auto& w : mu.weights) all_uniform = all_uniform && w == uniform;
    all_invariant = all_invariant && verify_invariance(mu, a);
  }
  s.check("invariant measure is uniform 1/|X| from every base point", all_uniform);
  s.check("invariant measure passes the exact invariance check", all_invariant);
  return s;
}

bool all_phi_defined(const GroupAction& a) {
  for (PointId x = 0; x < a.degree(); ++x)
    if (!std::holds_alternative<PhiMap>(phi_map(a, x))) return false;
  return true;
}

Suite suite_phi(const Instance& inst) {
  Suite s("phi");
  const GroupAction& a = inst.action;
  if (!classify(a).transitive) {
    s.skip("not transitive");
    return s;
  }
  bool agree = true;
  bool witnesses_hold = true;
  for (const auto& row : phi_well_defined_iff_normal(a)) {
    agree = agree && row.agree();
    const PhiResult r = phi_map(a, row.x);
    if (const auto* w = std::get_if<IllDefinedWitness>(&r)) witnesses_hold = witnesses_hold && w->holds(a);
  }
  s.check("phi_x well defined iff S(x) normal, at every point", agree);
  s.check("every ill-definedness witness satisfies its defining relations", witnesses_hold);
  if (!all_phi_defined(a)) {
    s.note("phi is ill defined at some point; property checks not applicable");
    return s;
  }
  for (PointId x = 0; x < a.degree(); ++x) {
    const auto failure = check_phi_properties(a, x);
    std::string detail;
    if (failure)
      detail = "property " + std::to_string(failure->index) + " fails at alpha #" + std::to_string(failure->alpha) +
               ", y=" + std::to_string(failure->y);
    s.check("phi properties 1-4 at x=" + std::to_string(x), !failure.has_value(), detail);
  }
  return s;
}

Suite suite_operators(const Instance& inst, const RunOptions& opts) {
  Suite s("operators");
  const GroupAction& a = inst.action;
  const auto induced = find_translation_failure(a, Convention::induced);
  s.check("induced translations form a homomorphism into permutation matrices", !induced.has_value());
  const auto left = find_translation_failure(a, Convention::left);
  s.check("left translations form an anti-homomorphism into permutation matrices", !left.has_value());
  if (!classify(a).transitive) {
    s.note("not transitive; U_x checks not applicable");
    return s;
  }
  if (!all_phi_defined(a)) {
    s.note("phi is ill defined at some point; U_x checks not applicable");
    return s;
  }
  const InvariantMeasure mu = invariant_measure(a, 0);
  std::mt19937_64 rng(opts.seed);
  const auto n = static_cast<Eigen::Index>(a.degree());
  const LinearOperator id = LinearOperator::Identity(n, n);
  for (PointId x = 0; x < a.degree(); ++x) {
    const auto failure = check_operator_identities(a, x);
    s.check("operator identities 1-3 at x=" + std::to_string(x), !failure.has_value(),
            failure ? "identity " + std::to_string(failure->index) + " fails at alpha #" + std::to_string(failure->alpha)
                    : "");
    const LinearOperator u = u_operator(a, x);
    s.check("U_x is an involution and unitary at x=" + std::to_string(x),
            (u * u).cwiseEqual(id).all() && (u.adjoint() * u).cwiseEqual(id).all());
    std::vector<Function> fs;
    for (int i = 0; i < 100; ++i) fs.push_back(random_function(rng, a.degree()));
    const auto bad = check_u_isometry(a, x, mu, fs);
    s.check("U_x exact isometry for p in {1, 2, inf} and integral preserved, 100 functions, x=" + std::to_string(x),
            !bad.has_value(), bad ? "function " + std::to_string(*bad) : "");
  }
  s.check("every point-fixing element acts trivially (well-defined scope)",
          std::holds_alternative<Certified>(stabilizer_invariance_probe(a)));
  return s;
}

Json full_decomposition_json(const UnitaryRep& r, const Decomposition& d, const DecompositionCheck& c,
                             const Tolerances& tol) {
  Json j = decomposition_json(r, d, c);
  Json hdims = Json::array();
  for (PointId x = 0; x < r.degree(); ++x) hdims.push_back(h_space(r.action(), x).dim());
  j["probes"] = Json{{"h_space_dims", hdims}, {"h_space_intersections", h_space_intersections(r, d, tol)}};
  return j;
}

Suite suite_peterweyl(const Instance& inst, const RunOptions& opts) {
  Suite s("peterweyl");
  const GroupAction& a = inst.action;
  if (!classify(a).transitive) {
    s.skip("not transitive");
    return s;
  }
  const Tolerances& tol = opts.tol;
  const UnitaryRep r = unitary_rep(a, invariant_measure(a, 0));
  const Decomposition d = decompose(r, opts.seed, DecomposeOptions{tol});
  const DecompositionCheck c = check_decomposition(r, d, tol);
  s.check("pieces pairwise orthogonal", c.max_offdiag_gram <= tol.ortho, fmt(c.max_offdiag_gram));
  s.check("piece bases orthonormal", c.max_orthonormality <= tol.ortho, fmt(c.max_orthonormality));
  s.check("pieces invariant", c.max_invariance <= tol.inv, fmt(c.max_invariance));
  s.check("dimensions sum to |X|", c.dims_match, std::to_string(c.dim_sum));
  s.check("every piece minimal", c.all_minimal);
  s.check("commutant rank = orbital count = sum of squared multiplicities",
          d.commutant.spectral_rank == d.commutant.orbital_count &&
              d.commutant.orbital_count == d.sum_multiplicity_squares(),
          std::to_string(d.commutant.spectral_rank) + " / " + std::to_string(d.commutant.orbital_count) + " / " +
              std::to_string(d.sum_multiplicity_squares()));

  std::mt19937_64 rng(opts.seed);
  const auto n = static_cast<Eigen::Index>(a.degree());
  LinearOperator m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m.col(j) = random_function(rng, a.degree());
  const LinearOperator e = commutant_average(r, m);
  double commute = 0.0;
  for (ElementId alpha = 0; alpha < a.group().order(); ++alpha)
    commute = std::max(commute, linalg::spectral_norm(r.op(alpha) * e - e * r.op(alpha)));
  const double idem = linalg::spectral_norm(commutant_average(r, e) - e);
  s.check("group average commutes with every operator and is idempotent", commute <= tol.inv && idem <= tol.inv,
          fmt(std::max(commute, idem)));

  bool round_trip = true;
  auto expect = [&](const std::vector<std::size_t>& idx) {
    const MatchResult m = subcollection_match(r, direct_sum(d, idx), d, tol.subspace);
    const auto* hit = std::get_if<Match>(&m);
    round_trip = round_trip && hit && hit->indices == idx;
  };
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    expect({i});
    all.push_back(i);
  }
  expect(all);
  for (const auto& [label, mult] : d.multiplicities) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < d.labels.size(); ++i)
      if (d.labels[i] == label) block.push_back(i);
    expect(block);
  }
  s.check("sums of pieces are recovered by subcollection matching", round_trip);

  const Decomposition again = decompose(r, opts.seed, DecomposeOptions{tol});
  const DecompositionCheck c2 = check_decomposition(r, again, tol);
  s.check("decomposition reproducible for a fixed seed",
          full_decomposition_json(r, d, c, tol).dump() == full_decomposition_json(r, again, c2, tol).dump());
  return s;
}

// ---------------------------------------------------------------- probe

Json probe_json(const std::string& claim, const std::string& statement, const std::string& status) {
  return Json{{"claim", claim}, {"statement", statement}, {"status", status}, {"alpha", nullptr},
              {"x", nullptr},   {"f_support", Json::array()}, {"details", Json::object()}};
}

}  // namespace

Outcome analyze(const Instance& inst, const RunOptions& opts) {
  Stopwatch clock(opts.timings);
  Outcome out;
  out.report = envelope(inst, opts, "analyze");
  fill_analysis(inst, out.report, out.summary);
  clock.lap("analyze");
  clock.attach(out.report);
  return out;
}

Outcome decompose_instance(const Instance& inst, const RunOptions& opts) {
  Stopwatch clock(opts.timings);
  Outcome out;
  out.report = envelope(inst, opts, "decompose");
  fill_analysis(inst, out.report, out.summary);
  clock.lap("analyze");
  const UnitaryRep r = unitary_rep(inst.action, invariant_measure(inst.action, 0));
  const Decomposition d = decompose(r, opts.seed, DecomposeOptions{opts.tol});
  clock.lap("decompose");
  const DecompositionCheck c = check_decomposition(r, d, opts.tol);
  out.report["decomposition"] = full_decomposition_json(r, d, c, opts.tol);
  clock.lap("checks");
  clock.attach(out.report);

  std::ostringstream dims;
  dims << "dims [";
  for (std::size_t i = 0; i < d.pieces.size(); ++i) dims << (i ? "," : "") << d.pieces[i].dim();
  dims << "] labels [";
  for (std::size_t i = 0; i < d.labels.size(); ++i) dims << (i ? "," : "") << d.labels[i];
  dims << "] commutant " << d.commutant.spectral_rank << " orbitals " << d.commutant.orbital_count;
  out.summary.push_back(dims.str());
  if (!c.ok(opts.tol) || !d.commutant.agree() || d.sum_multiplicity_squares() != d.commutant.orbital_count) {
    out.summary.push_back("decomposition checks FAILED");
    out.exit_code = kInternal;
  }
  return out;
}

Outcome verify(const Instance& inst, const std::string& suite, const RunOptions& opts) {
  Stopwatch clock(opts.timings);
  Outcome out;
  out.report = envelope(inst, opts, "verify --suite " + suite);
  std::vector<Suite> results;
  const bool all = suite == "all";
  if (all || suite == "axioms") results.push_back(suite_axioms(inst, opts)), clock.lap("axioms");
  if (all || suite == "measure") results.push_back(suite_measure(inst)), clock.lap("measure");
  if (all || suite == "phi") results.push_back(suite_phi(inst)), clock.lap("phi");
  if (all || suite == "operators") results.push_back(suite_operators(inst, opts)), clock.lap("operators");
  if (all || suite == "peterweyl") results.push_back(suite_peterweyl(inst, opts)), clock.lap("peterweyl");
  if (results.empty()) throw std::invalid_argument("unknown suite \"" + suite + "\"");

  Json suites = Json::array();
  bool failed = false;
  for (const auto& s : results) {
    suites.push_back(s.json());
    out.summary.push_back(s.line());
    failed = failed || s.failed();
  }
  out.report["suites"] = std::move(suites);
  out.report["passed"] = !failed;
  out.exit_code = failed ? kInternal : kOk;
  clock.attach(out.report);
  return out;
}

Outcome probe(const Instance& inst, const std::string& claim, const RunOptions& opts) {
  Stopwatch clock(opts.timings);
  Outcome out;
  out.report = envelope(inst, opts, "probe --claim " + claim);
  const GroupAction& a = inst.action;
  Json p;

  if (claim == "cor34") {
    const std::string text = "an element fixing some point leaves every function on X unchanged under f -> f o phi_alpha";
    const StabilizerProbe r = stabilizer_invariance_probe(a);
    if (const auto* w = std::get_if<StabilizerWitness>(&r)) {
      p = probe_json(claim, text, "witness");
      p["alpha"] = element_json(a, w->alpha);
      p["x"] = w->x;
      p["f_support"] = Json::array({w->support});
      p["details"] = Json{{"f_composed_support", Json::array({w->image})},
                          {"description", "alpha fixes x, and f o phi_alpha is the indicator of " +
                                              std::to_string(w->image) + ", not of " + std::to_string(w->support)}};
    } else {
      p = probe_json(claim, text, "certified");
    }
  } else if (claim == "thm13") {
    const std::string text = "if G acts faithfully on C(X), the action on X is free";
    const FaithfulFreeProbe r = faithful_free_probe(a);
    if (const auto* w = std::get_if<FaithfulFreeWitness>(&r)) {
      p = probe_json(claim, text, "witness");
      p["alpha"] = element_json(a, w->alpha);
      p["x"] = w->x;
      p["details"] = Json{{"faithful_on_functions", true},
                          {"free", false},
                          {"description", "the action on C(X) is faithful but alpha != e fixes x"}};
    } else {
      const auto& c = std::get<Consistent>(r);
      p = probe_json(claim, text, "consistent");
      p["details"] = Json{{"faithful_on_functions", c.faithful_on_functions}, {"free", c.free}};
    }
  } else if (claim == "thm44") {
    const std::string text = "for every x, the functions fixed by the stabilizer S(x) make up all of C(X)";
    const HSpaceProbe r = h_space_probe(a);
    if (const auto* w = std::get_if<HSpaceWitness>(&r)) {
      p = probe_json(claim, text, "witness");
      p["x"] = w->x;
      // an element of S(x) moving some y: the indicator of y lies outside H(x)
      for (ElementId alpha : stabilizer(a, w->x).members) {
        PointId y = 0;
        while (y < a.degree() && a.act(alpha, y) == y) ++y;
        if (y < a.degree()) {
          p["alpha"] = element_json(a, alpha);
          p["f_support"] = Json::array({y});
          break;
        }
      }
      p["details"] = Json{{"dim_h", w->dim}, {"degree", w->degree}};
    } else {
      p = probe_json(claim, text, "certified");
      p["details"] = Json{{"dim_h", a.degree()}, {"degree", a.degree()}};
    }
  } else if (claim == "conjecture") {
    const std::string text =
        "one fixed collection of minimal invariant subspaces sums to every closed invariant subspace";
    const UnitaryRep r = unitary_rep(a, invariant_measure(a, 0));
    const Decomposition d = decompose(r, opts.seed, DecomposeOptions{opts.tol});
    clock.lap("decompose");
    const ConjectureResult res = conjecture_probe(r, d, opts.trials, opts.seed, opts.tol);
    if (const auto* ce = std::get_if<Counterexample>(&res)) {
      p = probe_json(claim, text, "counterexample");
      Json f_support = Json::array();
      for (Eigen::Index y = 0; y < ce->subspace.basis.rows(); ++y)
        if (std::abs(ce->subspace.basis(y, 0)) > opts.tol.subspace) f_support.push_back(y);
      p["f_support"] = std::move(f_support);
      Json details{{"phase", ce->from_random_phase ? "random" : "constructive"},
                   {"dim", ce->subspace.dim()},
                   {"defect", ce->defect},
                   {"invariance_residual", ce->invariance}};
      if (!ce->from_random_phase) {
        details["piece_a"] = ce->piece_a;
        details["piece_b"] = ce->piece_b;
        details["isotypic_label"] = d.labels[ce->piece_a];
        details["description"] = "graph of a nonzero intertwiner between two equivalent pieces";
      }
      details["basis"] = to_json(ce->subspace.basis);
      p["details"] = std::move(details);
    } else {
      p = probe_json(claim, text, "certified");
      p["details"] = Json{{"trials", std::get<ConjectureCertified>(res).trials},
                          {"multiplicity_free", d.multiplicity_free()}};
    }
  } else {
    throw std::invalid_argument("unknown claim \"" + claim + "\"");
  }

  const std::string status = p["status"].get<std::string>();
  out.exit_code = (status == "witness" || status == "counterexample") ? kWitness : kOk;
  std::string line = claim + ": " + status;
  if (!p["alpha"].is_null()) line += " alpha=" + p["alpha"]["cycles"].get<std::string>();
  if (!p["x"].is_null()) line += " x=" + std::to_string(p["x"].get<PointId>());
  if (claim == "conjecture" && status == "counterexample") line += " defect=" + fmt(p["details"]["defect"].get<double>());
  out.summary.push_back(line);
  out.report["probe"] = std::move(p);
  clock.lap("probe");
  clock.attach(out.report);
  return out;
}

}  // namespace homspace::app
