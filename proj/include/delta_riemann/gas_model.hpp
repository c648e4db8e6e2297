#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace delta_riemann {

// Polytropic state law p(rho) = rho^gamma with gamma > 1, the genuinely
// nonlinear regime (p'' > 0).  gamma = 1 is rejected at construction.
class GasLaw {
 public:
  explicit GasLaw(double gamma) : gamma_(gamma) {
    if (!(gamma > 1.0))
      throw std::domain_error("GasLaw: gamma must be > 1");
  }

  double gamma() const { return gamma_; }

  double pressure(double rho) const {
    if (rho < 0.0) throw std::domain_error("pressure: negative density");
    return std::pow(rho, gamma_);
  }

  // c = sqrt(p'(rho)) = sqrt(gamma rho^(gamma-1)); vacuum has no sound speed.
  double sound_speed(double rho) const {
    if (!(rho > 0.0))
      throw std::domain_error("sound_speed: density must be positive");
    return std::sqrt(gamma_ * std::pow(rho, gamma_ - 1.0));
  }

 private:
  double gamma_;
};

// Phase-plane point (u, rho).  rho = 0 appears only inside vacuum bands of
// classical solutions.
struct GasState {
  double u = 0.0;
  double rho = 0.0;
};

inline bool operator==(const GasState& a, const GasState& b) {
  return a.u == b.u && a.rho == b.rho;
}

// Characteristic speeds lambda_1 = u - c < lambda_2 = u + c.
inline std::pair<double, double> eigenvalues(const GasLaw& law,
                                             const GasState& s) {
  const double c = law.sound_speed(s.rho);
  return {s.u - c, s.u + c};
}

// p(rho) - p(rho_ref), evaluated through expm1 when rho/rho_ref is close to 1
// so the difference keeps full relative accuracy at the tangency rho -> rho_ref.
inline double pressure_diff(const GasLaw& law, double rho, double rho_ref) {
  if (rho < 0.0 || rho_ref <= 0.0)
    throw std::domain_error("pressure_diff: invalid density");
  const double delta = rho / rho_ref - 1.0;
  if (std::abs(delta) < 0.5 && rho > 0.0)
    return law.pressure(rho_ref) * std::expm1(law.gamma() * std::log1p(delta));
  return law.pressure(rho) - law.pressure(rho_ref);
}

// Integral of sqrt(p'(s))/s from rho_ref to rho, in closed form:
// (2 sqrt(gamma)/(gamma-1)) (rho^((gamma-1)/2) - rho_ref^((gamma-1)/2)).
inline double rarefaction_shift(const GasLaw& law, double rho, double rho_ref) {
  const double g = law.gamma();
  const double e = 0.5 * (g - 1.0);
  const double k = 2.0 * std::sqrt(g) / (g - 1.0);
  const double delta = rho_ref > 0.0 ? rho / rho_ref - 1.0 : 0.0;
  if (rho_ref > 0.0 && std::abs(delta) < 0.5 && rho > 0.0)
    return k * std::pow(rho_ref, e) * std::expm1(e * std::log1p(delta));
  return k * (std::pow(rho, e) - std::pow(rho_ref, e));
}

// Left states with u2 - u1 >= (2/(gamma-1))(c1 + c2) can only be joined
// through a vacuum band between the two rarefaction fans.
inline double vacuum_threshold(const GasLaw& law, double rho1, double rho2) {
  const double two_over = 2.0 / (law.gamma() - 1.0);
  return two_over * (law.sound_speed(rho1) + law.sound_speed(rho2));
}

}  // namespace delta_riemann
