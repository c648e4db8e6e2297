#include "delta_riemann/wave_curves.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace delta_riemann {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sqrt((rho - rho_b)(p - p_b) / (rho rho_b)); the product is nonnegative on
// both sides of the base state because p is increasing.
double hugoniot_offset(const GasLaw& law, const GasState& base, double rho) {
  const double dp = pressure_diff(law, rho, base.rho);
  const double num = (rho - base.rho) * dp;
  return std::sqrt(std::max(0.0, num) / (rho * base.rho));
}

// sqrt(((gamma+1) p - p_b) / rho_b), defined for rho >= rho_b/(gamma+1)^(1/gamma).
double speed_bound_offset(const GasLaw& law, const GasState& base, double rho) {
  const double g = law.gamma();
  const double num = (g + 1.0) * law.pressure(rho) - law.pressure(base.rho);
  return std::sqrt(std::max(0.0, num) / base.rho);
}

double m_curve_rho_lo(const GasLaw& law, const GasState& base) {
  return base.rho / std::pow(law.gamma() + 1.0, 1.0 / law.gamma());
}

}  // namespace

const char* curve_name(CurveId id) {
  switch (id) {
    case CurveId::S1: return "S1";
    case CurveId::S2: return "S2";
    case CurveId::S11: return "S11";
    case CurveId::S22: return "S22";
    case CurveId::R1: return "R1";
    case CurveId::R2: return "R2";
    case CurveId::R1Star: return "R1*";
    case CurveId::R2Star: return "R2*";
    case CurveId::D1: return "D1";
    case CurveId::D2: return "D2";
    case CurveId::M1: return "M1";
    case CurveId::M2: return "M2";
    case CurveId::M11: return "M11";
    case CurveId::M21: return "M21";
    case CurveId::D11: return "D11";
    case CurveId::D21: return "D21";
  }
  return "?";
}

CurveId curve_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(CurveId::D21); ++i) {
    const CurveId id = static_cast<CurveId>(i);
    if (name == curve_name(id)) return id;
  }
  // accept the star curves without punctuation for CLI convenience
  if (name == "R1star" || name == "R1Star") return CurveId::R1Star;
  if (name == "R2star" || name == "R2Star") return CurveId::R2Star;
  throw std::invalid_argument("unknown curve name: " + std::string(name));
}

CurveDomain curve_domain(const GasLaw& law, CurveId id, const GasState& base) {
  if (!(base.rho > 0.0))
    throw std::domain_error("curve_domain: base density must be positive");
  const double rb = base.rho;
  switch (id) {
    case CurveId::S1:
    case CurveId::S22:
    case CurveId::R2:
    case CurveId::R1Star:
    case CurveId::D1:
    case CurveId::D11:
      return {rb, kInf};
    case CurveId::S2:
    case CurveId::S11:
    case CurveId::R1:
    case CurveId::R2Star:
    case CurveId::D2:
    case CurveId::D21:
      return {0.0, rb};
    case CurveId::M1:
    case CurveId::M11:
      return {m_curve_rho_lo(law, base), kInf};
    case CurveId::M2:
    case CurveId::M21:
      return {m_curve_rho_lo(law, base), rb};
  }
  return {0.0, 0.0};
}

double eval_curve(const GasLaw& law, CurveId id, const GasState& base,
                  double rho) {
  const CurveDomain dom = curve_domain(law, id, base);
  if (!(rho >= dom.rho_lo && rho <= dom.rho_hi) || !(rho > 0.0)) {
    std::ostringstream msg;
    msg << "eval_curve: rho = " << rho << " outside domain [" << dom.rho_lo
        << ", " << dom.rho_hi << "] of curve " << curve_name(id)
        << " based at rho = " << base.rho;
    throw std::domain_error(msg.str());
  }
  switch (id) {
    case CurveId::S1:
    case CurveId::S2:
      return base.u - hugoniot_offset(law, base, rho);
    case CurveId::S11:
    case CurveId::S22:
      return base.u + hugoniot_offset(law, base, rho);
    case CurveId::R1:
    case CurveId::R1Star:
      return base.u - rarefaction_shift(law, rho, base.rho);
    case CurveId::R2:
    case CurveId::R2Star:
      return base.u + rarefaction_shift(law, rho, base.rho);
    case CurveId::D1:
      return base.u - std::sqrt(std::max(0.0, pressure_diff(law, rho, base.rho)) / base.rho);
    case CurveId::D2:
      return base.u - std::sqrt(std::max(0.0, pressure_diff(law, base.rho, rho)) / rho);
    case CurveId::D11:
      return base.u + std::sqrt(std::max(0.0, pressure_diff(law, rho, base.rho)) / base.rho);
    case CurveId::D21:
      return base.u + std::sqrt(std::max(0.0, pressure_diff(law, base.rho, rho)) / rho);
    case CurveId::M1:
      return base.u - law.sound_speed(rho) - speed_bound_offset(law, base, rho);
    case CurveId::M2:
      return base.u - law.sound_speed(rho) + speed_bound_offset(law, base, rho);
    case CurveId::M11:
      return base.u + law.sound_speed(rho) + speed_bound_offset(law, base, rho);
    case CurveId::M21:
      return base.u + law.sound_speed(rho) - speed_bound_offset(law, base, rho);
  }
  throw std::logic_error("eval_curve: unreachable");
}

std::vector<CurvePoint> sample_curve(const GasLaw& law, CurveId id,
                                     const GasState& base, double rho_lo,
                                     double rho_hi, int n) {
  if (n < 2) throw std::invalid_argument("sample_curve: need n >= 2");
  if (!(rho_lo > 0.0) || rho_lo > rho_hi)
    throw std::invalid_argument("sample_curve: empty or inverted rho range");
  std::vector<CurvePoint> pts;
  pts.reserve(static_cast<size_t>(n));
  const double log_lo = std::log(rho_lo);
  const double log_hi = std::log(rho_hi);
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    double rho = (i == 0) ? rho_lo
                : (i == n - 1) ? rho_hi
                               : std::exp(log_lo + f * (log_hi - log_lo));
    pts.push_back({rho, eval_curve(law, id, base, rho)});
  }
  return pts;
}

bool on_curve(const GasLaw& law, CurveId id, const GasState& base,
              const GasState& q, double tol_u) {
  const CurveDomain dom = curve_domain(law, id, base);
  if (!(q.rho >= dom.rho_lo && q.rho <= dom.rho_hi) || !(q.rho > 0.0))
    return false;
  const double u = eval_curve(law, id, base, q.rho);
  return std::abs(q.u - u) <= tol_u * std::max(1.0, std::abs(q.u));
}

}  // namespace delta_riemann
