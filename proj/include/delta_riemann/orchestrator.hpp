#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "delta_riemann/classical_solver.hpp"
#include "delta_riemann/classifier.hpp"
#include "delta_riemann/delta_shock.hpp"

namespace delta_riemann {

enum class PlanKind {
  ConstantState,
  Classical,     // no atom: the classical wave fan is the measure solution
  SingleDelta,   // one delta shock separating the constant side states
  DeltaThenR2,   // delta shock into an intermediate state, then a 2-fan
  R1ThenDelta,   // 1-fan into an intermediate state, then a delta shock
};

// The non-unique intermediate state of the composite plans, with the exact
// admissible rho-interval it was picked from.
struct IntermediatePick {
  GasState state;
  double rho_lo = 0.0;
  double rho_hi = 0.0;
  double selection = 0.5;  // affine coordinate in [rho_lo, rho_hi]
};

class MeasureSolution;

// Follow-on plan spliced at (x_star, t_star) once the atom weight vanishes.
struct Continuation {
  double t_star = 0.0;
  double x_star = 0.0;
  std::shared_ptr<const MeasureSolution> plan;
};

struct SampledProfile {
  double time = 0.0;
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> u;
  struct Atom {
    double x = 0.0;
    double w = 0.0;
    double v = 0.0;
  };
  std::vector<Atom> atoms;
};

// A time-parameterized measure solution: piecewise absolutely continuous
// profile plus at most one Dirac atom riding the front.
class MeasureSolution {
 public:
  double gamma = 2.0;
  RiemannData data;
  RegionLabel label;
  PlanKind kind = PlanKind::ConstantState;
  bool entropic = true;  // false only under the explicit non-entropic override

  std::optional<DeltaShockPath> atom;
  std::optional<IntermediatePick> middle;
  std::optional<ClassicalSolution> classical;
  std::optional<Continuation> continuation;

  // last time the description (with continuation) is valid; finite only for
  // blow-up endings
  double validity_end() const;
  bool blows_up() const;

  // absolutely continuous part at (x, t); t is absolute, not recentered
  GasState ac_state(double x, double t) const;
  // positions where the a.c. part is non-smooth at time t (fronts, fan edges)
  std::vector<double> x_breakpoints(double t) const;
  // times where the structure changes (continuation junction, weight kinks)
  std::vector<double> t_breakpoints() const;

  struct AtomSample {
    bool alive = false;
    double x = 0.0;
    double w = 0.0;
    double w_m = 0.0;
    double v = 0.0;
  };
  AtomSample atom_at(double t) const;
};

struct NoMeasureSolution {
  RegionLabel label;
  std::string justification;
};

struct SolveOptions {
  bool allow_nonentropic = false;
};

// Measure solutions of the two-state problem (rho0 = 0), following the
// minimal-wave principle: IV0 -> single delta; IV1 and III -> delta + R2;
// IV2 and II -> R1 + delta; I and V admit no delta-bearing solution.
std::variant<MeasureSolution, NoMeasureSolution> solve_measure(
    const GasLaw& law, const GasState& U1, const GasState& U2,
    double selection = 0.5, const SolveOptions& opts = {});

// Singular problem (rho0 > 0): always at least a local delta shock; local
// solutions with finite front continue past extinction as a fresh rho0 = 0
// problem recentered at (x(t*), t*).
MeasureSolution solve_singular(const GasLaw& law, const RiemannData& data,
                               double selection = 0.5);

// Single-delta plan regardless of the entropy verdict (throws when no delta
// shock exists at all) and the classical wave fan wrapped as a measure
// solution; both are the `--delta` / `--classical` CLI modes.
MeasureSolution force_single_delta(const GasLaw& law, const RiemannData& data);
MeasureSolution classical_as_measure(const GasLaw& law,
                                     const RiemannData& data);

// Profile on n equally spaced grid points over [x_lo, x_hi] at time t, plus
// every atom whose support crosses the window.  Throws std::invalid_argument
// for t beyond all validity.
SampledProfile sample_solution(const MeasureSolution& sol, double t,
                               double x_lo, double x_hi, int n);

const char* to_string(PlanKind k);

}  // namespace delta_riemann
