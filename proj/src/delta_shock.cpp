#include "delta_riemann/delta_shock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "delta_riemann/numerics.hpp"

namespace delta_riemann {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_data(const RiemannData& data) {
  if (!(data.left.rho > 0.0) || !(data.right.rho > 0.0))
    throw std::domain_error("delta_shock: side densities must be positive");
  if (!(data.rho0 >= 0.0))
    throw std::domain_error("delta_shock: rho0 must be nonnegative");
}
}  // namespace

DeltaShockPath::DeltaShockPath(const GasLaw& law, const RiemannData& data)
    : gamma_(law.gamma()), data_(data) {
  check_data(data);
  jumps_ = brackets(law, data.left, data.right, data.u0);
  const double a = jumps_.a;
  const double b = jumps_.b;
  const double rho0 = data.rho0;
  const double u1 = data.left.u, u2 = data.right.u;
  const double rho1 = data.left.rho;
  std::ostringstream row;

  if (rho0 == 0.0) {
    if (jumps_.d_rho == 0.0) {
      if (!(jumps_.d_u < 0.0))
        throw std::domain_error("delta_shock: [rho]=0 requires [u]<0 when rho0=0");
      form_ = FrontForm::LinearEqual;
      slope_ = 0.5 * (u1 + u2);
      trend_ = WeightTrend::IncreasingToInfinity;
      row << "rho0=0 [rho]=0 [u]<0";
    } else {
      if (!(a >= 0.0))
        throw std::domain_error("delta_shock: a < 0 admits no delta shock for rho0=0");
      form_ = FrontForm::LinearGeneral;
      slope_ = (jumps_.d_m + std::sqrt(a)) / jumps_.d_rho;
      trend_ = a > 0.0 ? WeightTrend::IncreasingToInfinity : WeightTrend::Constant;
      row << "rho0=0 [rho]!=0 " << (a > 0.0 ? "a>0" : "a=0");
    }
  } else if (jumps_.d_rho == 0.0) {
    form_ = FrontForm::RationalEqual;
    const double du = jumps_.d_u;
    row << "rho0>0 [rho]=0 ";
    if (du < 0.0) {
      trend_ = WeightTrend::IncreasingToInfinity;
      row << "[u]<0";
    } else if (du == 0.0) {
      trend_ = WeightTrend::Constant;
      row << "[u]=0";
    } else {
      trend_ = WeightTrend::DecreasingToZero;
      lifespan_ = rho0 / (rho1 * du);
      lifespan_closed_ = false;
      row << "[u]>0";
      if (u1 + u2 == 2.0 * data.u0) {
        // x(t) = u0 t exactly; the blow-up limit formula degenerates to 0/0
        finite_x_edge_ = true;
        extinction_ = {ExtinctionKind::WeightVanishes, lifespan_, 0};
      } else {
        const int sign = data.u0 >= 0.5 * (u1 + u2) ? +1 : -1;
        extinction_ = {ExtinctionKind::BlowsUp, lifespan_, sign};
      }
    }
  } else {
    form_ = FrontForm::SqrtGeneral;

    // factor Delta first: cancellation-free evaluation near its roots, and
    // the lifespan is exactly the smallest positive root
    const double disc = b * b - a;
    if (a != 0.0 && disc >= 0.0) {
      delta_real_roots_ = true;
      const double r = std::sqrt(disc);
      // stable quadratic roots via Vieta: t1 t2 = rho0^2 / a
      const double q = b >= 0.0 ? -b - r : -b + r;
      droot1_ = rho0 * q / a;
      droot2_ = rho0 / q;
      if (droot1_ > droot2_) std::swap(droot1_, droot2_);
    } else if (a != 0.0) {
      dcenter_ = -rho0 * b / a;
      dim2_ = rho0 * rho0 * (-disc) / (a * a);
    } else if (b != 0.0) {
      delta_real_roots_ = true;
      droot1_ = -rho0 / (2.0 * b);
      droot2_ = droot1_;
    }

    const double sqrt_a = a >= 0.0 ? std::sqrt(a) : 0.0;
    row << "rho0>0 [rho]!=0 ";
    if (a > 0.0 && b > -sqrt_a) {
      trend_ = b >= 0.0 ? WeightTrend::IncreasingToInfinity
                        : WeightTrend::DecreasingThenIncreasing;
      row << "a>0 b>-sqrt(a)";
    } else if (a > 0.0 && b == -sqrt_a) {
      trend_ = WeightTrend::DecreasingToZeroThenIncreasing;
      kink_ = rho0 / sqrt_a;
      row << "a>0 b=-sqrt(a)";
    } else if (a == 0.0 && b >= 0.0) {
      trend_ = b > 0.0 ? WeightTrend::IncreasingToInfinity : WeightTrend::Constant;
      row << "a=0 " << (b > 0.0 ? "b>0" : "b=0");
    } else {
      // local: the weight vanishes at the smallest positive root of Delta
      lifespan_ = (a > 0.0 || a == 0.0) ? droot1_
                                        : std::max(droot1_, droot2_);
      lifespan_closed_ = true;
      extinction_ = {ExtinctionKind::WeightVanishes, lifespan_, 0};
      if (a < 0.0) {
        trend_ = b > 0.0 ? WeightTrend::IncreasingThenDecreasingToZero
                         : WeightTrend::DecreasingToZero;
        row << "a<0 " << (b >= 0.0 ? "b>=0" : "b<0");
      } else {
        trend_ = WeightTrend::DecreasingToZero;
        row << (a > 0.0 ? "a>0 b<-sqrt(a)" : "a=0 b<0");
      }
    }
  }
  case_row_ = row.str();
}

double DeltaShockPath::delta_of(double t) const {
  const double rho0 = data_.rho0;
  const double a = jumps_.a, b = jumps_.b;
  if (form_ != FrontForm::SqrtGeneral || rho0 == 0.0)
    return a * t * t + 2.0 * rho0 * b * t + rho0 * rho0;
  if (a == 0.0) {
    if (b == 0.0) return rho0 * rho0;
    return 2.0 * rho0 * b * (t - droot1_);
  }
  if (delta_real_roots_) return a * (t - droot1_) * (t - droot2_);
  const double dt = t - dcenter_;
  return a * (dt * dt + dim2_);
}

double DeltaShockPath::x(double t) const {
  const double rho0 = data_.rho0;
  switch (form_) {
    case FrontForm::LinearEqual:
    case FrontForm::LinearGeneral:
      return slope_ * t;
    case FrontForm::RationalEqual: {
      const double rho1 = data_.left.rho;
      const double du = jumps_.d_u;
      const double du2 = jumps_.d_flux;  // [rho u^2 + p] = rho1 [u^2] here
      const double num = du2 * t * t - 2.0 * rho0 * data_.u0 * t;
      // factored denominator keeps precision near the pole
      const double den = du == 0.0
                             ? -2.0 * rho0
                             : 2.0 * rho1 * du * (t - rho0 / (rho1 * du));
      return num / den;
    }
    case FrontForm::SqrtGeneral: {
      const double d = delta_of(t);
      return (jumps_.d_m * t - rho0 + std::sqrt(std::max(0.0, d))) / jumps_.d_rho;
    }
  }
  return 0.0;
}

double DeltaShockPath::xprime(double t) const {
  const double rho0 = data_.rho0;
  switch (form_) {
    case FrontForm::LinearEqual:
    case FrontForm::LinearGeneral:
      return slope_;
    case FrontForm::RationalEqual: {
      const double rho1 = data_.left.rho;
      const double du = jumps_.d_u;
      const double den = du == 0.0
                             ? -rho0
                             : rho1 * du * (t - rho0 / (rho1 * du));
      // rho1^2 [u][u^2] t^2 - 2 rho0 rho1 [u^2] t + 2 rho0^2 u0, with
      // rho1 [u^2] = [rho u^2 + p] since [p] = 0 here
      const double num = rho1 * du * jumps_.d_flux * t * t -
                         2.0 * rho0 * jumps_.d_flux * t +
                         2.0 * rho0 * rho0 * data_.u0;
      return num / (2.0 * den * den);
    }
    case FrontForm::SqrtGeneral: {
      const double d = delta_of(t);
      if (d <= 0.0) {
        if (!std::isnan(kink_))
          // global path whose weight touches zero once: take the right limit
          return (jumps_.d_m + std::sqrt(jumps_.a)) / jumps_.d_rho;
        // weight extinction: |x'| -> inf with the sign of -rho0 sqrt(b^2-a)/[rho]
        return jumps_.d_rho > 0.0 ? -kInf : kInf;
      }
      const double sd = std::sqrt(d);
      return (jumps_.d_m * sd + jumps_.a * t + rho0 * jumps_.b) /
             (jumps_.d_rho * sd);
    }
  }
  return 0.0;
}

double DeltaShockPath::w_rho(double t) const {
  const double rho0 = data_.rho0;
  switch (form_) {
    case FrontForm::LinearEqual:
      return -data_.left.rho * jumps_.d_u * t;
    case FrontForm::LinearGeneral:
      return std::sqrt(jumps_.a) * t;
    case FrontForm::RationalEqual:
      return -data_.left.rho * jumps_.d_u * t + rho0;
    case FrontForm::SqrtGeneral:
      return std::sqrt(std::max(0.0, delta_of(t)));
  }
  return 0.0;
}

double DeltaShockPath::x_at_lifespan() const {
  if (std::isinf(lifespan_)) return x(0.0);
  if (extinction_.kind == ExtinctionKind::BlowsUp)
    return extinction_.blow_up_sign > 0 ? kInf : -kInf;
  if (form_ == FrontForm::SqrtGeneral)
    return (jumps_.d_m * lifespan_ - data_.rho0) / jumps_.d_rho;
  return x(lifespan_);
}

std::vector<double> DeltaShockPath::smooth_breakpoints() const {
  if (!std::isnan(kink_)) return {kink_};
  return {};
}

std::variant<DeltaShockPath, NoDeltaShock> construct(const GasLaw& law,
                                                     const RiemannData& data) {
  check_data(data);
  if (data.rho0 == 0.0) {
    const Brackets jb = brackets(law, data.left, data.right, data.u0);
    if (jb.d_rho == 0.0) {
      if (jb.d_u == 0.0)
        return NoDeltaShock{NoDeltaShock::Reason::DegenerateConstant,
                            "coincident states with no point mass: constant solution"};
      if (jb.d_u > 0.0)
        return NoDeltaShock{NoDeltaShock::Reason::UJumpPositive,
                            "[rho]=0 and [u]>0: the weight would be negative"};
    } else if (jb.a < 0.0) {
      std::ostringstream msg;
      msg << "a = " << jb.a << " < 0: no real front slope";
      return NoDeltaShock{NoDeltaShock::Reason::ANegative, msg.str()};
    }
  }
  return DeltaShockPath(law, data);
}

namespace {

// Numeric fallback: first sign change of u1 - x' (left) or x' - u2 (right)
// on [0, horizon), refined by bisection.
EntropyInterval scan_entropy(const DeltaShockPath& path, double u_left,
                             double u_right) {
  EntropyInterval out;
  const double life = path.lifespan();
  double horizon = life;
  if (std::isinf(horizon)) {
    // pick a horizon past any transient; the asymptotic slope decides the rest
    horizon = 1e6 * std::max(1.0, path.rho0());
  }
  const int n = 10000;
  std::vector<double> grid;
  grid.reserve(n + 2);
  grid.push_back(0.0);
  // uniform to 90%, then geometric into the endpoint where x' may blow up
  const double t90 = 0.9 * horizon;
  for (int i = 1; i <= n / 2; ++i) grid.push_back(t90 * i / (n / 2));
  double tail = 0.1 * horizon;
  for (int i = 0; i < n / 2; ++i) {
    tail *= std::pow(1e-9 / 0.1, 1.0 / (n / 2));
    grid.push_back(horizon - tail);
  }
  if (std::isinf(life)) {
    // x' is monotone between its kinks, so a few far probes suffice to
    // bracket any late violation of the asymptotic slope
    grid.push_back(1e1 * horizon);
    grid.push_back(1e3 * horizon);
    grid.push_back(1e6 * horizon);
  }
  // never evaluate past the lifespan for local paths
  const auto ok = [&](double t) {
    const double xp = path.xprime(t);
    const double gl = u_left - xp;
    const double gr = xp - u_right;
    return std::pair<double, double>(gl, gr);
  };
  double prev_t = 0.0;
  auto [pgl, pgr] = ok(0.0);
  if (pgl < 0.0 || pgr < 0.0) {
    out.valid_until = 0.0;
    out.witness_time = 0.0;
    out.side = pgl < 0.0 ? EntropyInterval::Side::LeftFails
                         : EntropyInterval::Side::RightFails;
    return out;
  }
  for (size_t i = 1; i < grid.size(); ++i) {
    const double t = grid[i];
    if (t <= prev_t) continue;
    auto [gl, gr] = ok(t);
    if (gl < 0.0 || gr < 0.0) {
      const bool left_first = gl < 0.0;
      auto f = [&](double s) {
        const double xp = path.xprime(s);
        return left_first ? u_left - xp : xp - u_right;
      };
      const double root = bisect(f, prev_t, t, 1e-10, 0.0, 200);
      out.valid_until = root;
      out.witness_time = root;
      out.side = left_first ? EntropyInterval::Side::LeftFails
                            : EntropyInterval::Side::RightFails;
      return out;
    }
    prev_t = t;
    pgl = gl;
    pgr = gr;
  }
  return out;  // no violation found
}

}  // namespace

EntropyInterval entropy_interval(const GasLaw& law, const DeltaShockPath& path,
                                 const RiemannData& data) {
  (void)law;
  EntropyInterval out;
  const Brackets& jb = path.jumps();
  const double u1 = data.left.u, u2 = data.right.u;
  const double rho1 = data.left.rho, rho2 = data.right.rho;
  const double rho0 = data.rho0;

  if (rho0 == 0.0) {
    // constant front slope: the verdict is a pure sign test
    const double xp = path.xprime(0.0);
    if (u1 >= xp && xp >= u2) return out;  // always
    out.valid_until = 0.0;
    out.witness_time = 0.0;
    out.side = u1 < xp ? EntropyInterval::Side::LeftFails
                       : EntropyInterval::Side::RightFails;
    return out;
  }

  if (!(u2 <= data.u0 && data.u0 <= u1)) {
    // x'(0) = u0 already violates
    out.valid_until = 0.0;
    out.witness_time = 0.0;
    out.side = data.u0 > u1 ? EntropyInterval::Side::LeftFails
                            : EntropyInterval::Side::RightFails;
    return out;
  }

  if (path.form() == FrontForm::RationalEqual) return out;  // always

  const double a = jb.a, b = jb.b;
  const double du = jb.d_u;
  const double bound1 = rho1 * rho1 * du * du;
  const double bound2 = rho2 * rho2 * du * du;
  if (jb.d_rho > 0.0 && a >= bound1) return out;  // always
  if (jb.d_rho < 0.0 && a >= bound2) return out;  // always
  if (a > 0.0 && jb.d_rho > 0.0 && a < bound1) {
    // x'(t) meets u2 at the closed-form time
    const double t_star =
        -rho0 * b / a -
        (rho0 * rho1 * du / a) * std::sqrt((b * b - a) / (bound1 - a));
    out.valid_until = t_star;
    out.witness_time = t_star;
    out.side = EntropyInterval::Side::RightFails;
    return out;
  }
  if (a > 0.0 && jb.d_rho < 0.0 && a < bound2) {
    const double t_star =
        -rho0 * b / a -
        (rho0 * rho2 * du / a) * std::sqrt((b * b - a) / (bound2 - a));
    out.valid_until = t_star;
    out.witness_time = t_star;
    out.side = EntropyInterval::Side::LeftFails;
    return out;
  }
  return scan_entropy(path, u1, u2);
}

FrontConvexity convexity(const DeltaShockPath& path, const RiemannData& data) {
  if (data.rho0 == 0.0) return FrontConvexity::Straight;
  if (!(data.right.u <= data.u0 && data.u0 <= data.left.u))
    throw std::invalid_argument("convexity: requires u2 <= u0 <= u1");
  const Brackets& jb = path.jumps();
  if (jb.d_rho == 0.0) {
    const double s = 0.5 * (data.left.u + data.right.u) - data.u0;
    if (s > 0.0) return FrontConvexity::Convex;
    if (s < 0.0) return FrontConvexity::Concave;
    return FrontConvexity::Straight;
  }
  // x'' = rho0^2 (a - b^2) / ([rho] Delta^(3/2)); for a >= 0 this sign equals
  // sign(([rho u] + sqrt(a))/[rho] - u0)
  const double s = (jb.a - jb.b * jb.b) * (jb.d_rho > 0.0 ? 1.0 : -1.0);
  if (s > 0.0) return FrontConvexity::Convex;
  if (s < 0.0) return FrontConvexity::Concave;
  return FrontConvexity::Straight;
}

const char* to_string(FrontConvexity c) {
  switch (c) {
    case FrontConvexity::Convex: return "convex";
    case FrontConvexity::Concave: return "concave";
    case FrontConvexity::Straight: return "straight";
  }
  return "?";
}

const char* to_string(WeightTrend t) {
  switch (t) {
    case WeightTrend::IncreasingToInfinity: return "increasing";
    case WeightTrend::Constant: return "constant";
    case WeightTrend::DecreasingToZero: return "decreasing_to_zero";
    case WeightTrend::DecreasingThenIncreasing: return "decreasing_then_increasing";
    case WeightTrend::DecreasingToZeroThenIncreasing:
      return "decreasing_to_zero_then_increasing";
    case WeightTrend::IncreasingThenDecreasingToZero:
      return "increasing_then_decreasing_to_zero";
  }
  return "?";
}

const char* to_string(ExtinctionKind k) {
  switch (k) {
    case ExtinctionKind::None: return "none";
    case ExtinctionKind::WeightVanishes: return "weight_vanishes";
    case ExtinctionKind::BlowsUp: return "blows_up";
  }
  return "?";
}

}  // namespace delta_riemann
