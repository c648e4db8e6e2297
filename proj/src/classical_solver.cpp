#include "delta_riemann/classical_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "delta_riemann/numerics.hpp"
#include "delta_riemann/wave_curves.hpp"

namespace delta_riemann {

namespace {

double shock_offset(const GasLaw& law, const GasState& base, double rho) {
  const double num = (rho - base.rho) * pressure_diff(law, rho, base.rho);
  return std::sqrt(std::max(0.0, num) / (rho * base.rho));
}

ClassicalWave make_shock(const GasLaw& law, int family, const GasState& l,
                         const GasState& r) {
  ClassicalWave w;
  w.family = family;
  w.kind = WaveKind::Shock;
  w.left = l;
  w.right = r;
  w.sigma = (r.rho * r.u - l.rho * l.u) / (r.rho - l.rho);
  (void)law;
  return w;
}

ClassicalWave make_fan(const GasLaw& law, int family, const GasState& l,
                       const GasState& r) {
  ClassicalWave w;
  w.family = family;
  w.kind = WaveKind::Rarefaction;
  w.left = l;
  w.right = r;
  if (family == 1) {
    w.fan_head = l.u - law.sound_speed(l.rho);
    w.fan_tail = r.u - law.sound_speed(r.rho);
  } else {
    w.fan_head = l.u + law.sound_speed(l.rho);
    w.fan_tail = r.u + law.sound_speed(r.rho);
  }
  return w;
}

}  // namespace

GasState rarefaction_state(const GasLaw& law, int family, const GasState& edge,
                           double xi) {
  const double g = law.gamma();
  if (family == 1) {
    // xi = u - c with u + 2c/(gamma-1) frozen from the left edge
    const double inv = edge.u + 2.0 * law.sound_speed(edge.rho) / (g - 1.0);
    const double c = (g - 1.0) / (g + 1.0) * (inv - xi);
    const double rho = std::pow(c * c / g, 1.0 / (g - 1.0));
    return {xi + c, rho};
  }
  // xi = u + c with u - 2c/(gamma-1) frozen from the right edge
  const double inv = edge.u - 2.0 * law.sound_speed(edge.rho) / (g - 1.0);
  const double c = (g - 1.0) / (g + 1.0) * (xi - inv);
  const double rho = std::pow(c * c / g, 1.0 / (g - 1.0));
  return {xi - c, rho};
}

double forward_1_curve(const GasLaw& law, const GasState& U1, double rho) {
  if (rho > U1.rho) return U1.u - shock_offset(law, U1, rho);
  return U1.u - rarefaction_shift(law, rho, U1.rho);
}

double backward_2_curve(const GasLaw& law, const GasState& U2, double rho) {
  if (rho > U2.rho) return U2.u + shock_offset(law, U2, rho);
  return U2.u + rarefaction_shift(law, rho, U2.rho);
}

ClassicalSolution solve_classical(const GasLaw& law, const GasState& U1,
                                  const GasState& U2) {
  if (!(U1.rho > 0.0) || !(U2.rho > 0.0))
    throw std::domain_error("solve_classical: side densities must be positive");

  ClassicalSolution sol;
  sol.gamma = law.gamma();
  sol.left = U1;
  sol.right = U2;

  const RegionLabel label = classify(law, U1, U2);
  if (label.region == Region::Coincident) {
    sol.pattern = WavePattern::Constant;
    return sol;
  }

  if (label.region == Region::OnCurve) {
    switch (*label.curve) {
      case CurveId::S1:
        sol.pattern = WavePattern::SingleWave;
        sol.waves.push_back(make_shock(law, 1, U1, U2));
        return sol;
      case CurveId::S2:
        sol.pattern = WavePattern::SingleWave;
        sol.waves.push_back(make_shock(law, 2, U1, U2));
        return sol;
      case CurveId::R1:
        sol.pattern = WavePattern::SingleWave;
        sol.waves.push_back(make_fan(law, 1, U1, U2));
        return sol;
      case CurveId::R2:
        sol.pattern = WavePattern::SingleWave;
        sol.waves.push_back(make_fan(law, 2, U1, U2));
        return sol;
      default:
        break;  // D/S11/S22 boundaries still solve as two-wave patterns
    }
  }

  if (U2.u - U1.u >= vacuum_threshold(law, U1.rho, U2.rho)) {
    sol.pattern = WavePattern::R1VacR2;
    const double g = law.gamma();
    const GasState vac_l{U1.u + 2.0 * law.sound_speed(U1.rho) / (g - 1.0), 0.0};
    const GasState vac_r{U2.u - 2.0 * law.sound_speed(U2.rho) / (g - 1.0), 0.0};
    ClassicalWave f1;
    f1.family = 1;
    f1.kind = WaveKind::Rarefaction;
    f1.left = U1;
    f1.right = vac_l;
    f1.fan_head = U1.u - law.sound_speed(U1.rho);
    f1.fan_tail = vac_l.u;  // c -> 0 at the vacuum edge
    ClassicalWave f2;
    f2.family = 2;
    f2.kind = WaveKind::Rarefaction;
    f2.left = vac_r;
    f2.right = U2;
    f2.fan_head = vac_r.u;
    f2.fan_tail = U2.u + law.sound_speed(U2.rho);
    sol.waves.push_back(f1);
    sol.waves.push_back(f2);
    sol.vacuum = VacuumBand{vac_l.u, vac_r.u};
    return sol;
  }

  // Bracket the middle density.  f(rho) = forward_1(rho) - backward_2(rho)
  // is strictly decreasing, positive at rho -> 0 (no vacuum) and negative
  // for rho large enough.
  auto f = [&](double rho) {
    return forward_1_curve(law, U1, rho) - backward_2_curve(law, U2, rho);
  };
  double hi = std::max(U1.rho, U2.rho);
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("solve_classical: bracket overflow");
  }
  double lo = std::min(U1.rho, U2.rho) * 0.5;
  while (f(lo) < 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) throw std::runtime_error("solve_classical: bracket underflow");
  }
  // run the bracket down to double resolution: the curve difference is
  // strictly monotone, and the shock R-H residuals amplify any u-mismatch
  const double rho_m = bisect(f, lo, hi, 0.0, 0.0, 200);
  const GasState middle{forward_1_curve(law, U1, rho_m), rho_m};
  sol.middle = middle;

  const bool shock1 = rho_m > U1.rho;
  const bool shock2 = rho_m > U2.rho;
  sol.pattern = shock1 ? (shock2 ? WavePattern::S1S2 : WavePattern::S1R2)
                       : (shock2 ? WavePattern::R1S2 : WavePattern::R1R2);
  sol.waves.push_back(shock1 ? make_shock(law, 1, U1, middle)
                             : make_fan(law, 1, U1, middle));
  sol.waves.push_back(shock2 ? make_shock(law, 2, middle, U2)
                             : make_fan(law, 2, middle, U2));
  return sol;
}

GasState sample_classical(const ClassicalSolution& sol, double xi) {
  const GasLaw law(sol.gamma);
  if (sol.pattern == WavePattern::Constant) return sol.left;

  if (sol.vacuum) {
    const auto& band = *sol.vacuum;
    if (xi > band.xi_lo && xi < band.xi_hi) {
      // u is physically meaningless in vacuum; report the xi-interpolant of
      // the fan-tail velocities
      const double s = (xi - band.xi_lo) / (band.xi_hi - band.xi_lo);
      return {(1.0 - s) * band.xi_lo + s * band.xi_hi, 0.0};
    }
  }

  GasState state = sol.left;
  for (const auto& w : sol.waves) {
    if (w.kind == WaveKind::Shock) {
      if (xi < w.sigma) return state;
      state = w.right;
    } else {
      if (xi < w.fan_head) return state;
      if (xi < w.fan_tail) {
        return rarefaction_state(law, w.family,
                                 w.family == 1 ? w.left : w.right, xi);
      }
      state = w.right;
    }
  }
  return sol.right;
}

const char* to_string(WavePattern p) {
  switch (p) {
    case WavePattern::Constant: return "constant";
    case WavePattern::SingleWave: return "single_wave";
    case WavePattern::R1R2: return "R1R2";
    case WavePattern::R1S2: return "R1S2";
    case WavePattern::S1R2: return "S1R2";
    case WavePattern::S1S2: return "S1S2";
    case WavePattern::R1VacR2: return "R1VacR2";
  }
  return "?";
}

}  // namespace delta_riemann
