#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "delta_riemann/orchestrator.hpp"
#include "delta_riemann/verifier.hpp"

namespace delta_riemann {

// Problem description as accepted on the command line or as a JSON file
// with exactly these field names.
struct ProblemConfig {
  double gamma = 0.0;
  double u1 = 0.0;
  double rho1 = 0.0;
  double u2 = 0.0;
  double rho2 = 0.0;
  double rho0 = 0.0;
  double u0 = 0.0;
  double pick = 0.5;
};

struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(std::string f, const std::string& what)
      : std::runtime_error(what), field(std::move(f)) {}
};

// Throws ConfigError naming the offending field.
void validate(const ProblemConfig& cfg);

ProblemConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProblemConfig& cfg);

enum class SolveMode { Auto, Classical, Delta };

// Full solution document: config + mode + classification + plan.  The config
// and mode fields are sufficient to rebuild the solution exactly, so parsing
// and re-sampling a written document is bit-identical to direct sampling.
nlohmann::json solve_document(const ProblemConfig& cfg, SolveMode mode,
                              bool allow_nonentropic);

// Rebuilds the measure solution from a solve document (auto/delta modes).
MeasureSolution solution_from_document(const nlohmann::json& doc);

nlohmann::json plan_to_json(const MeasureSolution& sol);
nlohmann::json classical_to_json(const ClassicalSolution& sol);

// CSV emission: '.' decimal, LF endings, shortest round-trip doubles.
void write_profile_csv(std::ostream& os, const SampledProfile& prof);
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& pts,
                     const std::string& curve);
nlohmann::json atoms_to_json(const SampledProfile& prof);

std::string format_double(double v);

// Batch verification used by the `verify` command; parallelism is capped by
// DELTA_RIEMANN_THREADS.
struct VerifyOptions {
  int tests = 20;
  int order = 32;
  unsigned long long seed = 0;
};
nlohmann::json run_verification(const VerifyOptions& opts);

// Entry point for the delta-riemann binary: classify / solve / sample /
// curves / verify.  Exit codes: 0 success, 1 verification failure,
// 2 no measure solution, 64 malformed configuration.
int run_cli(int argc, char** argv);

}  // namespace delta_riemann
