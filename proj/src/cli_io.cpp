#include "delta_riemann/cli_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

namespace delta_riemann {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

GasLaw law_of(const ProblemConfig& cfg) { return GasLaw(cfg.gamma); }

RiemannData data_of(const ProblemConfig& cfg) {
  return {{cfg.u1, cfg.rho1}, {cfg.u2, cfg.rho2}, cfg.rho0, cfg.u0};
}

nlohmann::json finite_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}
}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void validate(const ProblemConfig& cfg) {
  if (!(cfg.gamma > 1.0))
    throw ConfigError("gamma", "gamma must be > 1");
  if (!(cfg.rho1 > 0.0))
    throw ConfigError("rho1", "rho1 must be > 0");
  if (!(cfg.rho2 > 0.0))
    throw ConfigError("rho2", "rho2 must be > 0");
  if (!std::isfinite(cfg.u1)) throw ConfigError("u1", "u1 must be finite");
  if (!std::isfinite(cfg.u2)) throw ConfigError("u2", "u2 must be finite");
  if (!(cfg.rho0 >= 0.0))
    throw ConfigError("rho0", "rho0 must be >= 0");
  if (!(cfg.pick >= 0.0 && cfg.pick <= 1.0))
    throw ConfigError("pick", "pick must lie in [0, 1]");
  if (cfg.rho0 > 0.0 && !std::isfinite(cfg.u0))
    throw ConfigError("u0", "u0 is required when rho0 > 0");
}

ProblemConfig config_from_json(const nlohmann::json& j) {
  ProblemConfig cfg;
  const auto need = [&](const char* field) -> double {
    if (!j.contains(field) || !j.at(field).is_number())
      throw ConfigError(field, std::string("missing or non-numeric field: ") + field);
    return j.at(field).get<double>();
  };
  cfg.gamma = need("gamma");
  cfg.u1 = need("u1");
  cfg.rho1 = need("rho1");
  cfg.u2 = need("u2");
  cfg.rho2 = need("rho2");
  cfg.rho0 = j.contains("rho0") ? need("rho0") : 0.0;
  if (j.contains("u0")) cfg.u0 = need("u0");
  else if (cfg.rho0 > 0.0)
    throw ConfigError("u0", "u0 is required when rho0 > 0");
  cfg.pick = j.contains("pick") ? need("pick") : 0.5;
  validate(cfg);
  return cfg;
}

nlohmann::json to_json(const ProblemConfig& cfg) {
  return {{"gamma", cfg.gamma}, {"u1", cfg.u1},     {"rho1", cfg.rho1},
          {"u2", cfg.u2},       {"rho2", cfg.rho2}, {"rho0", cfg.rho0},
          {"u0", cfg.u0},       {"pick", cfg.pick}};
}

namespace {

nlohmann::json existence_to_json(const ExistenceReport& rep) {
  nlohmann::json j;
  j["exists"] = rep.exists;
  j["global_in_time"] = rep.global_in_time;
  switch (rep.entropic.kind) {
    case EntropyKind::Always: j["entropic"] = "always"; break;
    case EntropyKind::Never: j["entropic"] = "never"; break;
    case EntropyKind::Until:
      j["entropic"] = "until";
      j["entropic_until"] = rep.entropic.until;
      break;
  }
  j["case_row"] = rep.case_row;
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  return j;
}

nlohmann::json atom_to_json(const GasLaw& law, const DeltaShockPath& path,
                            const RiemannData& data) {
  nlohmann::json j;
  j["case_row"] = path.case_row();
  j["lifespan"] = finite_or_string(path.lifespan());
  j["lifespan_closed"] = path.lifespan_closed();
  j["weight_trend"] = to_string(path.weight_trend());
  const Extinction ext = path.extinction();
  j["extinction"] = {{"kind", to_string(ext.kind)},
                     {"time", finite_or_string(ext.time)},
                     {"blow_up_sign", ext.blow_up_sign}};
  if (data.rho0 == 0.0) j["front_slope"] = path.xprime(0.0);
  if (!std::isinf(path.lifespan()))
    j["x_at_lifespan"] = finite_or_string(path.x_at_lifespan());
  const auto kinks = path.smooth_breakpoints();
  if (!kinks.empty()) j["weight_kinks"] = kinks;
  const EntropyInterval ei = entropy_interval(law, path, data);
  j["entropy_valid_until"] = finite_or_string(ei.valid_until);
  if (data.rho0 > 0.0 && data.right.u <= data.u0 && data.u0 <= data.left.u)
    j["convexity"] = to_string(convexity(path, data));
  else if (data.rho0 == 0.0)
    j["convexity"] = to_string(FrontConvexity::Straight);
  if (path.finite_x_edge_case())
    j["note"] =
        "u0 equals the side-state mean: x(t) stays finite at t*, unlike the "
        "tabulated blow-up limit";
  return j;
}

nlohmann::json wave_to_json(const ClassicalWave& w) {
  nlohmann::json j;
  j["family"] = w.family;
  j["kind"] = w.kind == WaveKind::Shock ? "shock" : "rarefaction";
  j["left"] = {{"u", w.left.u}, {"rho", w.left.rho}};
  j["right"] = {{"u", w.right.u}, {"rho", w.right.rho}};
  if (w.kind == WaveKind::Shock)
    j["sigma"] = w.sigma;
  else
    j["fan_span"] = {w.fan_head, w.fan_tail};
  return j;
}

}  // namespace

nlohmann::json classical_to_json(const ClassicalSolution& sol) {
  nlohmann::json j;
  j["pattern"] = to_string(sol.pattern);
  if (sol.middle)
    j["middle"] = {{"u", sol.middle->u}, {"rho", sol.middle->rho}};
  nlohmann::json waves = nlohmann::json::array();
  for (const auto& w : sol.waves) waves.push_back(wave_to_json(w));
  j["waves"] = waves;
  if (sol.vacuum) j["vacuum_band"] = {sol.vacuum->xi_lo, sol.vacuum->xi_hi};
  return j;
}

nlohmann::json plan_to_json(const MeasureSolution& sol) {
  const GasLaw law(sol.gamma);
  nlohmann::json j;
  j["kind"] = to_string(sol.kind);
  j["region"] = region_name(sol.label);
  j["entropic"] = sol.entropic;
  if (sol.atom) j["atom"] = atom_to_json(law, *sol.atom, sol.data);
  if (sol.middle) {
    j["intermediate"] = {{"u", sol.middle->state.u},
                         {"rho", sol.middle->state.rho},
                         {"rho_interval",
                          {sol.middle->rho_lo, sol.middle->rho_hi}},
                         {"selection", sol.middle->selection}};
  }
  if (sol.classical) j["classical"] = classical_to_json(*sol.classical);
  if (sol.continuation) {
    j["continuation"] = {{"t_star", sol.continuation->t_star},
                         {"x_star", sol.continuation->x_star},
                         {"plan", plan_to_json(*sol.continuation->plan)}};
  }
  return j;
}

nlohmann::json solve_document(const ProblemConfig& cfg, SolveMode mode,
                              bool allow_nonentropic) {
  validate(cfg);
  const GasLaw law = law_of(cfg);
  const RiemannData data = data_of(cfg);

  nlohmann::json doc;
  doc["config"] = to_json(cfg);
  doc["mode"] = mode == SolveMode::Auto      ? "auto"
                : mode == SolveMode::Classical ? "classical"
                                               : "delta";
  doc["allow_nonentropic"] = allow_nonentropic;
  doc["classification"] = {
      {"region", region_name(classify(law, data.left, data.right))},
      {"existence", existence_to_json(delta_existence(law, data))}};

  switch (mode) {
    case SolveMode::Classical: {
      if (cfg.rho0 > 0.0)
        throw ConfigError("rho0", "--classical requires rho0 = 0");
      doc["plan"] = plan_to_json(classical_as_measure(law, data));
      return doc;
    }
    case SolveMode::Delta: {
      auto res = construct(law, data);
      if (std::holds_alternative<NoDeltaShock>(res)) {
        doc["no_solution"] = {
            {"reason", std::get<NoDeltaShock>(res).message},
            {"classical_fallback",
             to_string(solve_classical(law, data.left, data.right).pattern)}};
        return doc;
      }
      doc["plan"] = plan_to_json(force_single_delta(law, data));
      return doc;
    }
    case SolveMode::Auto:
      break;
  }

  if (cfg.rho0 > 0.0) {
    doc["plan"] = plan_to_json(solve_singular(law, data, cfg.pick));
    return doc;
  }
  auto res = solve_measure(law, data.left, data.right, cfg.pick,
                           {allow_nonentropic});
  if (std::holds_alternative<NoMeasureSolution>(res)) {
    const auto& no = std::get<NoMeasureSolution>(res);
    doc["no_solution"] = {
        {"region", region_name(no.label)},
        {"justification", no.justification},
        {"classical_fallback",
         to_string(solve_classical(law, data.left, data.right).pattern)}};
    return doc;
  }
  doc["plan"] = plan_to_json(std::get<MeasureSolution>(res));
  return doc;
}

MeasureSolution solution_from_document(const nlohmann::json& doc) {
  const ProblemConfig cfg = config_from_json(doc.at("config"));
  const GasLaw law = law_of(cfg);
  const RiemannData data = data_of(cfg);
  const std::string mode = doc.value("mode", "auto");
  if (mode == "classical") return classical_as_measure(law, data);
  if (mode == "delta") return force_single_delta(law, data);
  if (cfg.rho0 > 0.0) return solve_singular(law, data, cfg.pick);
  auto res = solve_measure(law, data.left, data.right, cfg.pick,
                           {doc.value("allow_nonentropic", false)});
  if (std::holds_alternative<NoMeasureSolution>(res))
    throw std::runtime_error(
        "document describes data without a measure solution; nothing to sample");
  return std::get<MeasureSolution>(res);
}

void write_profile_csv(std::ostream& os, const SampledProfile& prof) {
  os << "x,rho,u\n";
  for (size_t i = 0; i < prof.x.size(); ++i)
    os << format_double(prof.x[i]) << ',' << format_double(prof.rho[i]) << ','
       << format_double(prof.u[i]) << '\n';
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& pts,
                     const std::string& curve) {
  os << "rho,u,curve\n";
  for (const auto& p : pts)
    os << format_double(p.rho) << ',' << format_double(p.u) << ',' << curve
       << '\n';
}

nlohmann::json atoms_to_json(const SampledProfile& prof) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : prof.atoms)
    atoms.push_back({{"x", a.x}, {"w", a.w}, {"v", a.v}});
  return {{"t", prof.time}, {"atoms", atoms}};
}

namespace {

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned n = std::min(hw, 8u);
  if (const char* env = std::getenv("DELTA_RIEMANN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<unsigned>(std::min<long>(v, 256));
  }
  return static_cast<int>(n);
}

struct CheckOutcome {
  nlohmann::json detail;
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

// one randomized verification case; i seeds the generator so results do not
// depend on the thread layout
CheckOutcome run_case(int i, const VerifyOptions& opts) {
  CheckOutcome out;
  std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + 0x2545f491ull * i + 7ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double gammas[3] = {1.4, 2.0, 3.0};
  const GasLaw law(gammas[i % 3]);
  const GasState U1{-1.0 + 2.0 * unit(rng), 0.5 + 1.5 * unit(rng)};

  MeasureSolution sol;
  std::string tag;
  if (i % 4 == 3) {
    // singular problem with entropic point mass
    const Region regions[3] = {Region::IV0, Region::IV1, Region::II};
    const GasState U2 = random_state_in_region(law, U1, regions[i % 3], rng);
    const double lo = std::min(U1.u, U2.u), hi = std::max(U1.u, U2.u);
    RiemannData data{U1, U2, 0.25 + unit(rng), lo + (hi - lo) * unit(rng)};
    sol = solve_singular(law, data, 0.5);
    tag = "singular";
  } else {
    const Region regions[5] = {Region::IV0, Region::IV1, Region::III,
                               Region::IV2, Region::II};
    const GasState U2 = random_state_in_region(law, U1, regions[i % 5], rng);
    auto res = solve_measure(law, U1, U2, 0.3 + 0.4 * unit(rng));
    out.expect(std::holds_alternative<MeasureSolution>(res),
               "expected a measure solution in a delta-bearing region");
    if (!std::holds_alternative<MeasureSolution>(res)) return out;
    sol = std::get<MeasureSolution>(res);
    tag = region_name(sol.label);
  }
  out.detail["case"] = tag;
  out.detail["gamma"] = law.gamma();

  // bump placement: center on the structure at a time inside the validity
  const double life = sol.atom ? sol.atom->lifespan() : kInf;
  double t0 = 1.0, rt = 0.6;
  if (!std::isinf(life) && !sol.continuation) {
    t0 = 0.55 * life;
    rt = 0.35 * life;
  } else if (!std::isinf(life) && sol.continuation) {
    t0 = life;  // straddle the junction
    rt = 0.6 * life;
  }
  const auto bps = sol.x_breakpoints(t0);
  const double x_lo = bps.empty() ? -1.0 : bps.front();
  const double x_hi = bps.empty() ? 1.0 : bps.back();
  TestBump bump{0.5 * (x_lo + x_hi), t0, 0.5 * (x_hi - x_lo) + 1.0, rt, 3};

  const ResidualReport clean = weak_residual(sol, bump, opts.order);
  out.detail["mass_residual"] = clean.mass_residual;
  out.detail["momentum_residual"] = clean.momentum_residual;
  out.detail["scale"] = clean.scale;
  out.expect(std::abs(clean.mass_residual) <= 1e-6 * clean.scale,
             tag + ": weak mass residual above 1e-6*scale");
  out.expect(std::abs(clean.momentum_residual) <= 1e-6 * clean.scale,
             tag + ": weak momentum residual above 1e-6*scale");

  if (sol.atom && sol.atom->w_rho(std::min(t0, 0.9 * life)) > 1e-12) {
    Perturbation pert;
    pert.atom_weight_factor = 1.001;
    const ResidualReport bad = weak_residual(sol, bump, opts.order, pert);
    const double floor =
        std::max(std::abs(clean.mass_residual), 1e-15 * clean.scale);
    out.expect(std::abs(bad.mass_residual) >= 1e3 * floor,
               tag + ": 0.1% weight corruption not detected at 1e3x the floor");
  }

  if (sol.atom) {
    const GrhResiduals grh = grh_residual(*sol.atom, sol.data, 1000);
    out.expect(grh.mass <= 1e-8, tag + ": generalized R-H mass residual");
    out.expect(grh.momentum <= 1e-8, tag + ": generalized R-H momentum residual");

    const EntropyInterval ei = entropy_interval(law, *sol.atom, sol.data);
    const auto scanned = entropy_scan(sol, 20000);
    if (std::isinf(ei.valid_until)) {
      out.expect(!scanned.has_value(),
                 tag + ": scan found a violation where the closed form says none");
    } else {
      out.expect(scanned.has_value() &&
                     std::abs(*scanned - ei.valid_until) <=
                         1e-8 * std::max(1.0, ei.valid_until),
                 tag + ": entropy interval and scan disagree");
    }
  }
  return out;
}

}  // namespace

nlohmann::json run_verification(const VerifyOptions& opts) {
  std::vector<CheckOutcome> outcomes(opts.tests);
  const int workers = std::max(1, std::min(thread_budget(), opts.tests));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < opts.tests; i += workers)
        outcomes[i] = run_case(i, opts);
    });
  }
  for (auto& th : pool) th.join();

  nlohmann::json summary;
  int checks = 0;
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json cases = nlohmann::json::array();
  for (int i = 0; i < opts.tests; ++i) {
    checks += outcomes[i].checks;
    for (const auto& f : outcomes[i].failures)
      failures.push_back({{"case", i}, {"what", f}});
    cases.push_back(outcomes[i].detail);
  }

  // curve-ordering lemmas over the acceptance gamma sweep
  nlohmann::json order_checks = nlohmann::json::array();
  for (double g : {1.4, 2.0, 3.0}) {
    const GasLaw law(g);
    for (const auto& check : curve_order_checks(law, {0.0, 1.0}, 2000)) {
      ++checks;
      if (!check.pass)
        failures.push_back(
            {{"case", "curve_order"}, {"what", check.name + " failed"}});
      order_checks.push_back({{"gamma", g},
                              {"name", check.name},
                              {"pass", check.pass},
                              {"min_margin", check.min_margin}});
    }
  }

  summary["tests"] = opts.tests;
  summary["order"] = opts.order;
  summary["seed"] = opts.seed;
  summary["checks"] = checks;
  summary["failures"] = failures;
  summary["curve_order"] = order_checks;
  summary["cases"] = cases;
  summary["pass"] = failures.empty();
  return summary;
}

namespace {

struct CliOptions {
  std::optional<double> gamma, u1, rho1, u2, rho2, rho0, u0, pick;
  std::string config_path;

  ProblemConfig resolve() const {
    ProblemConfig cfg;
    bool have_file = false;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in)
        throw ConfigError("config", "cannot open config file: " + config_path);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config", std::string("config file is not valid JSON: ") + e.what());
      }
      cfg = config_from_json(j);
      have_file = true;
    }
    const auto pickup = [&](const std::optional<double>& v, double& slot) {
      if (v) slot = *v;
    };
    if (!have_file) {
      const auto need = [&](const std::optional<double>& v, const char* name) {
        if (!v) throw ConfigError(name, std::string("missing required option --") + name);
        return *v;
      };
      cfg.gamma = need(gamma, "gamma");
      cfg.u1 = need(u1, "u1");
      cfg.rho1 = need(rho1, "rho1");
      cfg.u2 = need(u2, "u2");
      cfg.rho2 = need(rho2, "rho2");
      cfg.rho0 = rho0.value_or(0.0);
      if (cfg.rho0 > 0.0 && !u0)
        throw ConfigError("u0", "u0 is required when rho0 > 0");
      cfg.u0 = u0.value_or(0.0);
      cfg.pick = pick.value_or(0.5);
    } else {
      pickup(gamma, cfg.gamma);
      pickup(u1, cfg.u1);
      pickup(rho1, cfg.rho1);
      pickup(u2, cfg.u2);
      pickup(rho2, cfg.rho2);
      pickup(rho0, cfg.rho0);
      pickup(u0, cfg.u0);
      pickup(pick, cfg.pick);
    }
    validate(cfg);
    return cfg;
  }
};

void add_config_options(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--gamma", opts.gamma, "adiabatic exponent (> 1)");
  cmd->add_option("--u1", opts.u1, "left velocity");
  cmd->add_option("--rho1", opts.rho1, "left density (> 0)");
  cmd->add_option("--u2", opts.u2, "right velocity");
  cmd->add_option("--rho2", opts.rho2, "right density (> 0)");
  cmd->add_option("--rho0", opts.rho0, "initial point mass (>= 0, default 0)");
  cmd->add_option("--u0", opts.u0, "point-mass velocity (required if rho0 > 0)");
  cmd->add_option("--pick", opts.pick,
                  "selection parameter in [0,1] for the non-unique "
                  "intermediate state (default 0.5)");
  cmd->add_option("--config", opts.config_path,
                  "JSON file with fields gamma,u1,rho1,u2,rho2,rho0,u0,pick");
}

void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to " + path);
  out << payload;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "delta-riemann: exact classical and Radon-measure (delta shock) "
      "solutions of Riemann problems for the isentropic Euler equations of "
      "polytropic gases"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string out_path, atoms_path, plan_path, curve_name_arg;
  bool classical_mode = false, delta_mode = false, allow_nonentropic = false;
  double sample_time = 1.0, x_lo = -1.0, x_hi = 1.0;
  double curve_rho_lo = 0.0, curve_rho_hi = 0.0;
  int sample_n = 201, curve_n = 128;
  VerifyOptions vopts;

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "phase-plane region and delta-shock existence");
  add_config_options(classify_cmd, opts);
  classify_cmd->add_option("-o,--output", out_path, "output JSON path (default stdout)");

  CLI::App* solve_cmd = app.add_subcommand("solve", "construct a solution plan");
  add_config_options(solve_cmd, opts);
  solve_cmd->add_flag("--classical", classical_mode, "force the classical wave-fan solver");
  solve_cmd->add_flag("--delta", delta_mode, "force a single delta shock");
  solve_cmd->add_flag("--allow-nonentropic", allow_nonentropic,
                      "construct entropy-violating delta shocks for study");
  solve_cmd->add_option("-o,--output", out_path, "output JSON path (default stdout)");

  CLI::App* sample_cmd =
      app.add_subcommand("sample", "sample a solution profile to CSV");
  add_config_options(sample_cmd, opts);
  sample_cmd->add_option("--plan", plan_path, "sample a previously written solve document");
  sample_cmd->add_flag("--classical", classical_mode, "force the classical wave-fan solver");
  sample_cmd->add_flag("--delta", delta_mode, "force a single delta shock");
  sample_cmd->add_option("--time,-t", sample_time, "sample time (>= 0)")->required();
  sample_cmd->add_option("--xlo", x_lo, "window lower edge");
  sample_cmd->add_option("--xhi", x_hi, "window upper edge");
  sample_cmd->add_option("-n", sample_n, "grid points");
  sample_cmd->add_option("-o,--output", out_path, "CSV output path (default stdout)");
  sample_cmd->add_option("--atoms", atoms_path, "sidecar JSON path for the atom list");

  CLI::App* curves_cmd = app.add_subcommand("curves", "tabulate a phase-plane curve to CSV");
  curves_cmd->add_option("--curve", curve_name_arg, "curve id (S1,S2,S11,S22,R1,R2,R1*,R2*,D1,D2,M1,M2,M11,M21,D11,D21)")
      ->required();
  curves_cmd->add_option("--gamma", opts.gamma, "adiabatic exponent")->required();
  curves_cmd->add_option("--u1", opts.u1, "base velocity")->required();
  curves_cmd->add_option("--rho1", opts.rho1, "base density")->required();
  curves_cmd->add_option("--rho-lo", curve_rho_lo, "lower density")->required();
  curves_cmd->add_option("--rho-hi", curve_rho_hi, "upper density")->required();
  curves_cmd->add_option("-n", curve_n, "sample count (>= 2)");
  curves_cmd->add_option("-o,--output", out_path, "CSV output path (default stdout)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "randomized weak-formulation verification");
  verify_cmd->add_option("--tests", vopts.tests, "number of randomized cases");
  verify_cmd->add_option("--order", vopts.order, "quadrature points per axis");
  verify_cmd->add_option("--seed", vopts.seed, "random seed");
  verify_cmd->add_option("-o,--output", out_path, "output JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "invalid invocation: " << e.what() << "\n";
    return 64;
  }

  try {
    if (app.got_subcommand(classify_cmd)) {
      const ProblemConfig cfg = opts.resolve();
      const GasLaw law = law_of(cfg);
      const RiemannData data = data_of(cfg);
      nlohmann::json doc;
      doc["config"] = to_json(cfg);
      doc["region"] = region_name(classify(law, data.left, data.right));
      doc["existence"] = existence_to_json(delta_existence(law, data));
      emit(out_path, doc.dump(2) + "\n");
      return 0;
    }

    if (app.got_subcommand(solve_cmd)) {
      if (classical_mode && delta_mode)
        throw ConfigError("mode", "--classical and --delta are exclusive");
      const SolveMode mode = classical_mode ? SolveMode::Classical
                             : delta_mode   ? SolveMode::Delta
                                            : SolveMode::Auto;
      const ProblemConfig cfg = opts.resolve();
      const nlohmann::json doc = solve_document(cfg, mode, allow_nonentropic);
      emit(out_path, doc.dump(2) + "\n");
      return doc.contains("no_solution") ? 2 : 0;
    }

    if (app.got_subcommand(sample_cmd)) {
      MeasureSolution sol;
      if (!plan_path.empty()) {
        std::ifstream in(plan_path);
        if (!in) throw std::runtime_error("cannot open plan: " + plan_path);
        nlohmann::json doc;
        in >> doc;
        sol = solution_from_document(doc);
      } else {
        if (classical_mode && delta_mode)
          throw ConfigError("mode", "--classical and --delta are exclusive");
        const SolveMode mode = classical_mode ? SolveMode::Classical
                               : delta_mode   ? SolveMode::Delta
                                              : SolveMode::Auto;
        const ProblemConfig cfg = opts.resolve();
        nlohmann::json doc = solve_document(cfg, mode, allow_nonentropic);
        if (doc.contains("no_solution")) {
          std::cerr << "no measure solution: "
                    << doc["no_solution"].dump() << "\n";
          return 2;
        }
        sol = solution_from_document(doc);
      }
      const SampledProfile prof =
          sample_solution(sol, sample_time, x_lo, x_hi, sample_n);
      std::ostringstream csv;
      write_profile_csv(csv, prof);
      emit(out_path, csv.str());
      if (!atoms_path.empty())
        emit(atoms_path, atoms_to_json(prof).dump(2) + "\n");
      return 0;
    }

    if (app.got_subcommand(curves_cmd)) {
      const GasLaw law(opts.gamma.value());
      if (!(opts.rho1.value() > 0.0))
        throw ConfigError("rho1", "rho1 must be > 0");
      const GasState base{opts.u1.value(), opts.rho1.value()};
      const CurveId id = curve_from_name(curve_name_arg);
      const auto pts =
          sample_curve(law, id, base, curve_rho_lo, curve_rho_hi, curve_n);
      std::ostringstream csv;
      write_curve_csv(csv, pts, curve_name(id));
      emit(out_path, csv.str());
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      const nlohmann::json summary = run_verification(vopts);
      emit(out_path, summary.dump(2) + "\n");
      return summary["pass"].get<bool>() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration (field: " << e.field << "): "
              << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace delta_riemann
