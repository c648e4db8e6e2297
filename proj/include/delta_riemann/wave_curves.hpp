#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "delta_riemann/gas_model.hpp"

namespace delta_riemann {

// Every phase-plane curve used by the construction, anchored at a base state:
//   S1/S2     classical Lax shock loci, S11/S22 their non-Lax mirror branches
//   R1/R2     rarefaction curves, R1Star/R2Star their inverse (left-state) branches
//   D1/D2     delta-entropy boundaries a = min(rho^2, rho_base^2)[u]^2
//   M1/M2     speed-compatibility bounds x' <= lambda_2 for delta+R2 plans
//   M11/M21, D11/D21  the mirrored bounds, based at the right state, for R1+delta
enum class CurveId {
  S1, S2, S11, S22,
  R1, R2, R1Star, R2Star,
  D1, D2, M1, M2,
  M11, M21, D11, D21,
};

const char* curve_name(CurveId id);
CurveId curve_from_name(std::string_view name);

struct CurvePoint {
  double rho = 0.0;
  double u = 0.0;
};

// Admissible rho-range relative to the base state; closed on the base side,
// rho_hi may be +inf.  For D11 the paper restricts the range further to the
// orchestrator's search window; the evaluator keeps the natural domain.
struct CurveDomain {
  double rho_lo = 0.0;
  double rho_hi = 0.0;
};

CurveDomain curve_domain(const GasLaw& law, CurveId id, const GasState& base);

// u-coordinate of the named curve at abscissa rho.  Throws std::domain_error
// naming the violated restriction when rho falls outside the curve's domain.
double eval_curve(const GasLaw& law, CurveId id, const GasState& base,
                  double rho);

// n points with rho geometrically spaced over [rho_lo, rho_hi] (log spacing
// matches the density grids used everywhere else).  Throws
// std::invalid_argument for an inverted range or n < 2.
std::vector<CurvePoint> sample_curve(const GasLaw& law, CurveId id,
                                     const GasState& base, double rho_lo,
                                     double rho_hi, int n);

// |q.u - curve(q.rho)| <= tol_u * max(1, |q.u|), with q.rho inside the domain.
bool on_curve(const GasLaw& law, CurveId id, const GasState& base,
              const GasState& q, double tol_u = 1e-10);

}  // namespace delta_riemann
