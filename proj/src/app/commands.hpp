#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace homspace::app {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kInternal = 2, kWitness = 3 };

struct RunOptions {
  std::uint64_t seed = 42;
  Tolerances tol;
  std::size_t trials = 64;
  /// Wall-clock timings break byte-identical reports, so they are opt-in.
  bool timings = false;
};

struct Outcome {
  Json report;
  int exit_code = kOk;
  std::vector<std::string> summary;  ///< human-readable lines
};

inline const std::vector<std::string> kSuites = {"axioms", "measure", "phi", "operators", "peterweyl", "all"};
inline const std::vector<std::string> kClaims = {"cor34", "thm13", "thm44", "conjecture"};

/// Profile, measure and phi summary.
Outcome analyze(const Instance& inst, const RunOptions& opts);
/// analyze plus the decomposition report. Throws NotTransitive.
Outcome decompose_instance(const Instance& inst, const RunOptions& opts);
/// Exit kOk iff every selected suite passes, kInternal otherwise.
Outcome verify(const Instance& inst, const std::string& suite, const RunOptions& opts);
/// Exit kOk on certified/consistent, kWitness on a witness or counterexample.
/// Throws NotTransitive.
Outcome probe(const Instance& inst, const std::string& claim, const RunOptions& opts);

}  // namespace homspace::app
