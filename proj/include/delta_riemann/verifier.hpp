#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "delta_riemann/classical_solver.hpp"
#include "delta_riemann/delta_shock.hpp"
#include "delta_riemann/orchestrator.hpp"

namespace delta_riemann {

// Compactly supported C^1 test function
//   phi(x,t) = (1 - ((x-x0)/rx)^2)_+^k  (1 - ((t-t0)/rt)^2)_+^k,  k >= 2.
struct TestBump {
  double x0 = 0.0;
  double t0 = 1.0;
  double rx = 1.0;
  double rt = 0.5;
  int degree = 3;

  double value(double x, double t) const;
  double dx(double x, double t) const;
  double dt(double x, double t) const;
};

struct ResidualReport {
  double mass_residual = 0.0;      // left side of the mass identity
  double momentum_residual = 0.0;  // left side of the momentum identity
  double scale = 0.0;              // max absolute sub-integral, for normalization
  int quadrature_order = 0;
};

// Deliberate corruption hooks for sensitivity checks; the defaults leave the
// solution untouched.
struct Perturbation {
  double atom_weight_factor = 1.0;  // w -> factor * w on the atom
  double path_quadratic = 0.0;      // x(t) -> x(t) + eps t^2 in the R-H identities
};

// Weak-formulation residuals of the solution against the test bump.
// Smooth regions are integrated by tensor Gauss-Legendre of the given order
// per cell (subdividing along fronts and fan edges, with graded panels next
// to square-root endpoints); Dirac contributions enter as line integrals
// along the front; the initial term is added when the bump reaches t = 0.
ResidualReport weak_residual(const MeasureSolution& sol, const TestBump& bump,
                             int order, const Perturbation& pert = {});

struct GrhResiduals {
  double mass = 0.0;      // max |d w_rho/dt - ([rho] x' - [rho u])|, relative
  double momentum = 0.0;  // max |d w_m/dt - ([rho u] x' - [rho u^2 + p])|, relative
};

// Distance from t to the nearest degeneracy of the closed-form front: the
// (possibly complex) roots of Delta for the sqrt form, the denominator root
// for the rational form; `fallback` for straight fronts.  All derivative
// growth of w and x' is governed by this scale.
double smoothness_scale(const DeltaShockPath& path, double t, double fallback);

// Central-difference check of the generalized Rankine-Hugoniot identities on
// an n-point grid per smooth segment of the lifespan.  The differencing step
// at each point is h = h_scale * smoothness_scale(t); residuals are
// normalized pointwise and the truncation decays as O(h_scale^2).
GrhResiduals grh_residual(const DeltaShockPath& path, const RiemannData& data,
                          int n, const Perturbation& pert = {},
                          double h_scale = 1e-5);

struct OrderCheck {
  std::string name;
  bool pass = false;
  double min_margin = 0.0;  // positive margin means the strict inequality holds
  double argmin_rho = 0.0;
};

// The curve-ordering lemmas behind the phase-plane picture: H < 0 (R2 left
// of S22), its R1/S11 mirror, K < 0 with the induced M2/D2 separation, D1
// below S1 and D2 above S2.  Tangency happens only at rho = rho1, which the
// grids exclude.
std::vector<OrderCheck> curve_order_checks(const GasLaw& law,
                                           const GasState& U1, int n,
                                           double rho_span = 1e3);

// First time the over-compressing condition fails along the atom, found by
// grid scan plus bisection to 1e-10; nullopt when no violation is found.
// Throws std::invalid_argument when the solution carries no atom.
std::optional<double> entropy_scan(const MeasureSolution& sol, int n);

struct OracleMiddle {
  GasState middle;
  double cell_width = 0.0;
};

// Brute-force middle state: dense-grid argmin of the wave-curve mismatch.
// Test-side cross-check for solve_classical, never used in production paths.
OracleMiddle classical_oracle(const GasLaw& law, const GasState& U1,
                              const GasState& U2, int grid_size);

// Deterministic right state strictly inside the target region relative to
// U1 (interior of the bounding curves, away from tangencies).
GasState random_state_in_region(const GasLaw& law, const GasState& U1,
                                Region target, std::mt19937_64& rng);

}  // namespace delta_riemann
