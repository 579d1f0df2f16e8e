#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "homspace/errors.hpp"

namespace {

using namespace homspace;
using namespace homspace::app;

struct Cli {
  std::string instance_path;
  std::string suite = "all";
  std::string claim;
  std::string json_path;
  bool quiet = false;
  RunOptions opts;
};

void add_common(CLI::App* sub, Cli& cli) {
  sub->add_option("instance", cli.instance_path, "instance file (JSON)")->required();
  sub->add_option("--seed", cli.opts.seed, "seed for random draws")->capture_default_str();
  sub->add_option("--tol-ortho", cli.opts.tol.ortho, "orthogonality tolerance")->capture_default_str();
  sub->add_option("--tol-inv", cli.opts.tol.inv, "invariance residual tolerance")->capture_default_str();
  sub->add_option("--tol-rank", cli.opts.tol.rank, "relative singular-value cutoff")->capture_default_str();
  sub->add_option("--json", cli.json_path, "write the JSON report to this path ('-' for stdout)");
  sub->add_flag("--quiet", cli.quiet, "suppress the text summary");
  sub->add_flag("--timings", cli.opts.timings, "include wall-clock timings in the report");
}

int emit(const Outcome& out, const Cli& cli) {
  const bool json_to_stdout = cli.json_path == "-";
  if (!cli.quiet) {
    std::ostream& text = json_to_stdout ? std::cerr : std::cout;
    for (const auto& line : out.summary) text << line << '\n';
  }
  if (json_to_stdout) {
    std::cout << out.report.dump(2) << '\n';
  } else if (!cli.json_path.empty()) {
    std::ofstream f(cli.json_path);
    if (!f) {
      std::cerr << "error: cannot write " << cli.json_path << '\n';
      return kUsage;
    }
    f << out.report.dump(2) << '\n';
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite homogeneous spaces: invariant measures, phi maps, and minimal decompositions"};
  app.require_subcommand(1);
  Cli cli;

  auto* analyze_cmd = app.add_subcommand("analyze", "action profile, invariant measure and phi summary");
  auto* decompose_cmd = app.add_subcommand("decompose", "split C(X) into minimal invariant subspaces");
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites (exit 0 iff all pass)");
  auto* probe_cmd = app.add_subcommand("probe", "certify or refute a claim on this instance (exit 3 on a witness)");
  for (auto* sub : {analyze_cmd, decompose_cmd, verify_cmd, probe_cmd}) add_common(sub, cli);
  verify_cmd->add_option("--suite", cli.suite, "suite to run")->check(CLI::IsMember(kSuites))->capture_default_str();
  probe_cmd->add_option("--claim", cli.claim, "claim to probe")->check(CLI::IsMember(kClaims))->required();
  probe_cmd->add_option("--trials", cli.opts.trials, "random trials for the conjecture probe")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Instance inst = parse_instance_file(cli.instance_path);
    if (*analyze_cmd) return emit(analyze(inst, cli.opts), cli);
    if (*decompose_cmd) return emit(decompose_instance(inst, cli.opts), cli);
    if (*verify_cmd) return emit(verify(inst, cli.suite, cli.opts), cli);
    return emit(probe(inst, cli.claim, cli.opts), cli);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const AxiomViolation& e) {
    std::cerr << "invalid action: " << e.what() << '\n';
    return kUsage;
  } catch (const NotTransitive& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid instance: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return kInternal;
  }
}
