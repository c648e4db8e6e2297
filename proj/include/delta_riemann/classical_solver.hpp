#pragma once

#include <optional>
#include <vector>

#include "delta_riemann/classifier.hpp"
#include "delta_riemann/gas_model.hpp"

namespace delta_riemann {

enum class WavePattern { Constant, SingleWave, R1R2, R1S2, S1R2, S1S2, R1VacR2 };

enum class WaveKind { Shock, Rarefaction };

struct ClassicalWave {
  int family = 1;  // 1 or 2
  WaveKind kind = WaveKind::Shock;
  GasState left;
  GasState right;
  double sigma = 0.0;     // shock speed (shocks)
  double fan_head = 0.0;  // xi-span of the fan (rarefactions), head < tail
  double fan_tail = 0.0;
};

struct VacuumBand {
  double xi_lo = 0.0;
  double xi_hi = 0.0;
};

// Self-similar entropy-weak solution: constants separated by at most two
// waves, possibly with a vacuum band between fan tails.
struct ClassicalSolution {
  double gamma = 2.0;
  WavePattern pattern = WavePattern::Constant;
  GasState left;
  GasState right;
  std::optional<GasState> middle;
  std::vector<ClassicalWave> waves;  // ordered left to right in xi
  std::optional<VacuumBand> vacuum;
};

// u-value of the forward 1-family curve of U1 at rho (S1 above the base
// density, R1 below) and of the backward 2-family curve of U2.
double forward_1_curve(const GasLaw& law, const GasState& U1, double rho);
double backward_2_curve(const GasLaw& law, const GasState& U2, double rho);

// Wave-pattern selection plus bracketed bisection for the middle state; the
// curve difference is strictly monotone in rho so the bracket is unique.
ClassicalSolution solve_classical(const GasLaw& law, const GasState& U1,
                                  const GasState& U2);

// State inside a centered rarefaction fan at xi, reconstructed from the
// Riemann invariant carried across the fan: `edge` is the left state for
// family 1 and the right state for family 2.
GasState rarefaction_state(const GasLaw& law, int family, const GasState& edge,
                           double xi);

// Piecewise evaluation at xi = x/t.  Inside fans the state solves
// u -+ c = xi with the Riemann invariant frozen; inside a vacuum band the
// density is zero and u is the linear interpolant between the fan tails.
GasState sample_classical(const ClassicalSolution& sol, double xi);

const char* to_string(WavePattern p);

}  // namespace delta_riemann
