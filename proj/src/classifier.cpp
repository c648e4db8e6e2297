#include "delta_riemann/classifier.hpp"

#include <cmath>
#include <sstream>

#include "delta_riemann/delta_shock.hpp"

namespace delta_riemann {

Brackets brackets(const GasLaw& law, const GasState& U1, const GasState& U2,
                  double u0) {
  if (!(U1.rho > 0.0) || !(U2.rho > 0.0))
    throw std::domain_error("brackets: side densities must be positive");
  Brackets jb;
  jb.d_rho = U2.rho - U1.rho;
  jb.d_u = U2.u - U1.u;
  jb.d_p = pressure_diff(law, U2.rho, U1.rho);
  jb.d_m = U2.rho * U2.u - U1.rho * U1.u;
  jb.d_flux = U2.rho * U2.u * U2.u - U1.rho * U1.u * U1.u + jb.d_p;
  jb.a = U1.rho * U2.rho * jb.d_u * jb.d_u - jb.d_rho * jb.d_p;
  jb.b = jb.d_rho * u0 - jb.d_m;
  return jb;
}

std::string region_name(const RegionLabel& label) {
  switch (label.region) {
    case Region::I: return "I";
    case Region::I0Upper: return "I0_upper";
    case Region::I0Lower: return "I0_lower";
    case Region::HalfLineRho1: return "half_line_rho1";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV0: return "IV0";
    case Region::IV1: return "IV1";
    case Region::IV2: return "IV2";
    case Region::V: return "V";
    case Region::Coincident: return "coincident";
    case Region::OnCurve:
      return std::string("on_curve(") + curve_name(*label.curve) + ")";
  }
  return "?";
}

RegionLabel classify(const GasLaw& law, const GasState& U1, const GasState& U2,
                     double tol) {
  if (!(U1.rho > 0.0) || !(U2.rho > 0.0))
    throw std::domain_error("classify: side densities must be positive");

  const double tol_u = tol * std::max(1.0, std::abs(U2.u));
  const bool vacuum =
      U2.u - U1.u >= vacuum_threshold(law, U1.rho, U2.rho) - tol_u;

  if (U2.rho == U1.rho) {
    if (std::abs(U2.u - U1.u) <= tol_u) return {Region::Coincident, {}};
    if (U2.u < U1.u) return {Region::IV0, {}};  // D1 and D2 are tangent here
    return {vacuum ? Region::V : Region::HalfLineRho1, {}};
  }

  const auto near = [&](CurveId id) {
    return std::abs(U2.u - eval_curve(law, id, U1, U2.rho)) <= tol_u;
  };

  if (U2.rho > U1.rho) {
    // boundary labels first so curve points never read as interior
    for (CurveId id : {CurveId::S1, CurveId::S22, CurveId::R2, CurveId::D1})
      if (near(id)) return {Region::OnCurve, id};
    const double s1 = eval_curve(law, CurveId::S1, U1, U2.rho);
    if (U2.u < s1) {
      const double d1 = eval_curve(law, CurveId::D1, U1, U2.rho);
      return {U2.u < d1 ? Region::IV0 : Region::IV1, {}};
    }
    const double r2 = eval_curve(law, CurveId::R2, U1, U2.rho);
    if (U2.u < r2) return {Region::III, {}};
    const double s22 = eval_curve(law, CurveId::S22, U1, U2.rho);
    if (U2.u > s22) return {Region::I0Upper, {}};  // a > 0: delta exists here
    return {vacuum ? Region::V : Region::I, {}};
  }

  for (CurveId id : {CurveId::S2, CurveId::S11, CurveId::R1, CurveId::D2})
    if (near(id)) return {Region::OnCurve, id};
  const double s2 = eval_curve(law, CurveId::S2, U1, U2.rho);
  if (U2.u < s2) {
    const double d2 = eval_curve(law, CurveId::D2, U1, U2.rho);
    return {U2.u < d2 ? Region::IV0 : Region::IV2, {}};
  }
  const double r1 = eval_curve(law, CurveId::R1, U1, U2.rho);
  if (U2.u < r1) return {Region::II, {}};
  const double s11 = eval_curve(law, CurveId::S11, U1, U2.rho);
  if (U2.u > s11) return {Region::I0Lower, {}};
  return {vacuum ? Region::V : Region::I, {}};
}

ExistenceReport delta_existence(const GasLaw& law, const RiemannData& data) {
  ExistenceReport report;
  auto res = construct(law, data);
  if (std::holds_alternative<NoDeltaShock>(res)) {
    const auto& no = std::get<NoDeltaShock>(res);
    report.exists = false;
    report.global_in_time = false;
    report.entropic = {EntropyKind::Never, 0.0};
    report.reason = no.message;
    switch (no.reason) {
      case NoDeltaShock::Reason::ANegative: report.case_row = "a_negative"; break;
      case NoDeltaShock::Reason::UJumpPositive:
        report.case_row = "u_jump_positive";
        break;
      case NoDeltaShock::Reason::DegenerateConstant:
        report.case_row = "degenerate_constant";
        break;
    }
    return report;
  }
  const auto& path = std::get<DeltaShockPath>(res);
  report.exists = true;
  report.global_in_time = std::isinf(path.lifespan());
  report.case_row = path.case_row();
  const EntropyInterval ei = entropy_interval(law, path, data);
  if (std::isinf(ei.valid_until))
    report.entropic = {EntropyKind::Always, ei.valid_until};
  else if (ei.valid_until <= 1e-12)
    report.entropic = {EntropyKind::Never, 0.0};
  else
    report.entropic = {EntropyKind::Until, ei.valid_until};
  return report;
}

}  // namespace delta_riemann
