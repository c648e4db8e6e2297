#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "delta_riemann/classifier.hpp"
#include "delta_riemann/gas_model.hpp"

namespace delta_riemann {

// Which closed form the front x(t) takes.
enum class FrontForm {
  LinearEqual,    // rho0 = 0, [rho] = 0:  x = (u1+u2) t / 2
  LinearGeneral,  // rho0 = 0, [rho] != 0: x = ([rho u] + sqrt(a)) t / [rho]
  RationalEqual,  // rho0 > 0, [rho] = 0:  x = (rho1 [u^2] t^2 - 2 rho0 u0 t) / (2 (rho1 [u] t - rho0))
  SqrtGeneral,    // rho0 > 0, [rho] != 0: x = ([rho u] t - rho0 + sqrt(Delta)) / [rho]
};

enum class ExtinctionKind { None, WeightVanishes, BlowsUp };

struct Extinction {
  ExtinctionKind kind = ExtinctionKind::None;
  double time = std::numeric_limits<double>::infinity();
  int blow_up_sign = 0;  // +1 / -1 when kind == BlowsUp
};

enum class WeightTrend {
  IncreasingToInfinity,
  Constant,
  DecreasingToZero,
  DecreasingThenIncreasing,        // dips to a positive minimum, then grows
  DecreasingToZeroThenIncreasing,  // touches zero once (b = -sqrt(a)), then grows
  IncreasingThenDecreasingToZero,
};

// Closed-form delta-shock front with its Dirac weights.  All evaluation is
// exact formula work; no ODE integration happens anywhere.
class DeltaShockPath {
 public:
  DeltaShockPath(const GasLaw& law, const RiemannData& data);

  double x(double t) const;
  double xprime(double t) const;
  double w_rho(double t) const;
  double w_m(double t) const { return w_rho(t) * xprime(t); }
  double w_n(double t) const { return w_m(t) * xprime(t); }
  static double w_p(double) { return 0.0; }  // pressure weight vanishes identically

  FrontForm form() const { return form_; }
  const Brackets& jumps() const { return jumps_; }
  const RiemannData& data() const { return data_; }
  double gamma() const { return gamma_; }
  double rho0() const { return data_.rho0; }
  double u0() const { return data_.u0; }

  // T* in (0, +inf]; the interval is closed at T* for weight extinction
  // (x finite) and open for blow-up.
  double lifespan() const { return lifespan_; }
  bool lifespan_closed() const { return lifespan_closed_; }
  Extinction extinction() const { return extinction_; }
  WeightTrend weight_trend() const { return trend_; }
  std::string case_row() const { return case_row_; }

  // x(t*) = ([rho u] t* - rho0)/[rho] for weight extinction; +-inf for blow-up.
  double x_at_lifespan() const;

  // Interior times where x' jumps (the weight touches zero but the front
  // continues); empty for all other cases.
  std::vector<double> smooth_breakpoints() const;

  // The b = -sqrt(a) borderline of the [rho] = 0 local case keeps x(t)
  // finite where the limit formula would give +-inf; flagged, not guessed.
  bool finite_x_edge_case() const { return finite_x_edge_; }

 private:
  double gamma_;
  RiemannData data_;
  Brackets jumps_;
  FrontForm form_;
  double slope_ = 0.0;  // front slope for the two linear forms
  double lifespan_ = std::numeric_limits<double>::infinity();
  bool lifespan_closed_ = false;
  Extinction extinction_;
  WeightTrend trend_ = WeightTrend::Constant;
  std::string case_row_;
  double kink_ = std::numeric_limits<double>::quiet_NaN();
  bool finite_x_edge_ = false;
  // factored form of Delta(t) = a t^2 + 2 rho0 b t + rho0^2, kept to avoid
  // cancellation near the roots: real roots, or center/imaginary part
  bool delta_real_roots_ = false;
  double droot1_ = 0.0;
  double droot2_ = 0.0;
  double dcenter_ = 0.0;
  double dim2_ = 0.0;  // im^2 for the complex-conjugate case

  double delta_of(double t) const;
};

struct NoDeltaShock {
  enum class Reason { ANegative, UJumpPositive, DegenerateConstant };
  Reason reason;
  std::string message;
};

// Selects the closed form for the given data, or explains why no single
// delta shock exists (only possible for rho0 = 0).
std::variant<DeltaShockPath, NoDeltaShock> construct(const GasLaw& law,
                                                     const RiemannData& data);

struct EntropyInterval {
  // entropy u_l >= x'(t) >= u_r holds on [0, valid_until); +inf when it
  // never fails
  double valid_until = std::numeric_limits<double>::infinity();
  enum class Side { None, LeftFails, RightFails } side = Side::None;
  double witness_time = std::numeric_limits<double>::infinity();
};

// Closed-form verdict where one applies (constant side states), numeric
// sign-change bracketing otherwise.
EntropyInterval entropy_interval(const GasLaw& law, const DeltaShockPath& path,
                                 const RiemannData& data);

enum class FrontConvexity { Convex, Concave, Straight };

// Sign of x'' for entropy-satisfying data (u2 <= u0 <= u1); rho0 = 0 fronts
// are straight lines.  Throws std::invalid_argument outside the precondition.
FrontConvexity convexity(const DeltaShockPath& path, const RiemannData& data);

const char* to_string(FrontConvexity c);
const char* to_string(WeightTrend t);
const char* to_string(ExtinctionKind k);

}  // namespace delta_riemann
