#include "delta_riemann/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "delta_riemann/numerics.hpp"
#include "delta_riemann/wave_curves.hpp"

namespace delta_riemann {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Feasibility band for the intermediate state of a composite plan.  Both
// bands are single intervals: the on-curve u is monotone in rho while the
// bounding curves run the other way (or pinch at the domain corner).
struct Band {
  double rho_lo = 0.0;
  double rho_hi = 0.0;
};

struct Constraint {
  // margin >= 0 on the feasible side
  std::function<double(double)> margin;
};

Band find_band(double dom_lo, double dom_hi,
               const std::vector<Constraint>& constraints) {
  const int n = 4096;
  auto feasible = [&](double rho) {
    for (const auto& c : constraints)
      if (c.margin(rho) < 0.0) return false;
    return true;
  };
  const double log_lo = std::log(dom_lo), log_hi = std::log(dom_hi);
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n - 1));
  int first = -1, last = -1;
  for (int i = 0; i < n; ++i) {
    if (feasible(grid[i])) {
      if (first < 0) first = i;
      last = i;
    } else if (first >= 0) {
      break;  // past the single feasible block
    }
  }
  if (first < 0)
    throw std::runtime_error(
        "intermediate-state band is empty; data outside the composite regions");

  auto refine = [&](double bad, double good) {
    // bisect the constraint that is violated on the bad side
    for (const auto& c : constraints) {
      if (c.margin(bad) < 0.0 && c.margin(good) >= 0.0)
        return bisect(c.margin, bad, good, 1e-12, 0.0, 200);
    }
    return good;  // infeasibility vanished under refinement; keep the grid point
  };

  Band band;
  band.rho_lo = first == 0 ? grid[0] : refine(grid[first - 1], grid[first]);
  band.rho_hi =
      last == n - 1 ? grid[n - 1] : refine(grid[last + 1], grid[last]);
  return band;
}

MeasureSolution make_single_delta(const GasLaw& law, const RiemannData& data,
                                  const RegionLabel& label, bool entropic) {
  MeasureSolution sol;
  sol.gamma = law.gamma();
  sol.data = data;
  sol.label = label;
  sol.kind = PlanKind::SingleDelta;
  sol.entropic = entropic;
  sol.atom = DeltaShockPath(law, data);
  return sol;
}

MeasureSolution wrap_classical(const GasLaw& law, const RiemannData& data,
                               const RegionLabel& label) {
  MeasureSolution sol;
  sol.gamma = law.gamma();
  sol.data = data;
  sol.label = label;
  sol.kind = data.left == data.right ? PlanKind::ConstantState
                                     : PlanKind::Classical;
  sol.classical = solve_classical(law, data.left, data.right);
  if (sol.classical->pattern == WavePattern::Constant)
    sol.kind = PlanKind::ConstantState;
  return sol;
}

MeasureSolution make_delta_then_r2(const GasLaw& law, const GasState& U1,
                                   const GasState& U2,
                                   const RegionLabel& label, double selection) {
  const double g = law.gamma();
  const double dom_lo = U1.rho / std::pow(g + 1.0, 1.0 / g);
  const double dom_hi = U2.rho * (1.0 - 1e-13);
  auto u_on = [&](double rho) { return eval_curve(law, CurveId::R2Star, U2, rho); };
  std::vector<Constraint> cs;
  // speed compatibility x' <= lambda_2(Utilde): u >= M1
  cs.push_back({[&law, &U1, u_on](double rho) {
    return u_on(rho) - eval_curve(law, CurveId::M1, U1, rho);
  }});
  // entropy: Utilde inside IV0, i.e. below D1 (rho >= rho1) / D2 (rho < rho1)
  cs.push_back({[&law, &U1, u_on](double rho) {
    const CurveId id = rho >= U1.rho ? CurveId::D1 : CurveId::D2;
    return eval_curve(law, id, U1, rho) - u_on(rho);
  }});
  const Band band = find_band(dom_lo, std::min(dom_hi, U2.rho), cs);
  const double rho_m = band.rho_lo + selection * (band.rho_hi - band.rho_lo);
  const GasState mid{u_on(rho_m), rho_m};

  MeasureSolution sol;
  sol.gamma = g;
  sol.data = {U1, U2, 0.0, 0.0};
  sol.label = label;
  sol.kind = PlanKind::DeltaThenR2;
  sol.entropic = true;
  sol.atom = DeltaShockPath(law, {U1, mid, 0.0, 0.0});
  sol.middle = IntermediatePick{mid, band.rho_lo, band.rho_hi, selection};
  return sol;
}

MeasureSolution make_r1_then_delta(const GasLaw& law, const GasState& U1,
                                   const GasState& U2,
                                   const RegionLabel& label, double selection) {
  const double g = law.gamma();
  const double dom_lo = U2.rho / std::pow(g + 1.0, 1.0 / g);
  const double dom_hi = U1.rho;
  auto u_on = [&](double rho) { return eval_curve(law, CurveId::R1, U1, rho); };
  std::vector<Constraint> cs;
  // speed compatibility x' >= lambda_1(Utilde): u <= M11
  cs.push_back({[&law, &U2, u_on](double rho) {
    return eval_curve(law, CurveId::M11, U2, rho) - u_on(rho);
  }});
  // entropy: u >= D11 (rho >= rho2) / D21 (rho < rho2)
  cs.push_back({[&law, &U2, u_on](double rho) {
    const CurveId id = rho >= U2.rho ? CurveId::D11 : CurveId::D21;
    return u_on(rho) - eval_curve(law, id, U2, rho);
  }});
  const Band band = find_band(dom_lo, dom_hi, cs);
  const double rho_m = band.rho_lo + selection * (band.rho_hi - band.rho_lo);
  const GasState mid{u_on(rho_m), rho_m};

  MeasureSolution sol;
  sol.gamma = g;
  sol.data = {U1, U2, 0.0, 0.0};
  sol.label = label;
  sol.kind = PlanKind::R1ThenDelta;
  sol.entropic = true;
  sol.atom = DeltaShockPath(law, {mid, U2, 0.0, 0.0});
  sol.middle = IntermediatePick{mid, band.rho_lo, band.rho_hi, selection};
  return sol;
}

}  // namespace

double MeasureSolution::validity_end() const {
  if (continuation) return continuation->plan->validity_end();
  if (atom && !std::isinf(atom->lifespan()) &&
      atom->extinction().kind == ExtinctionKind::BlowsUp)
    return atom->lifespan();
  if (atom && !std::isinf(atom->lifespan()) && !continuation)
    return atom->lifespan();
  return kInf;
}

bool MeasureSolution::blows_up() const {
  return atom && atom->extinction().kind == ExtinctionKind::BlowsUp;
}

GasState MeasureSolution::ac_state(double x, double t) const {
  if (continuation && t > continuation->t_star)
    return continuation->plan->ac_state(x - continuation->x_star,
                                        t - continuation->t_star);
  const GasLaw law(gamma);
  switch (kind) {
    case PlanKind::ConstantState:
      return data.left;
    case PlanKind::Classical:
      if (t <= 0.0) return x < 0.0 ? data.left : data.right;
      return sample_classical(*classical, x / t);
    case PlanKind::SingleDelta: {
      if (t <= 0.0) return x < 0.0 ? data.left : data.right;
      return x < atom->x(t) ? data.left : data.right;
    }
    case PlanKind::DeltaThenR2: {
      if (t <= 0.0) return x < 0.0 ? data.left : data.right;
      if (x < atom->x(t)) return data.left;
      const GasState& mid = middle->state;
      const double xi = x / t;
      const double head = mid.u + law.sound_speed(mid.rho);
      const double tail = data.right.u + law.sound_speed(data.right.rho);
      if (xi < head) return mid;
      if (xi < tail) return rarefaction_state(law, 2, data.right, xi);
      return data.right;
    }
    case PlanKind::R1ThenDelta: {
      if (t <= 0.0) return x < 0.0 ? data.left : data.right;
      if (x >= atom->x(t)) return data.right;
      const GasState& mid = middle->state;
      const double xi = x / t;
      const double head = data.left.u - law.sound_speed(data.left.rho);
      const double tail = mid.u - law.sound_speed(mid.rho);
      if (xi < head) return data.left;
      if (xi < tail) return rarefaction_state(law, 1, data.left, xi);
      return mid;
    }
  }
  return data.left;
}

std::vector<double> MeasureSolution::x_breakpoints(double t) const {
  if (continuation && t > continuation->t_star) {
    auto pts = continuation->plan->x_breakpoints(t - continuation->t_star);
    for (double& p : pts) p += continuation->x_star;
    return pts;
  }
  const GasLaw law(gamma);
  std::vector<double> pts;
  if (t <= 0.0) return {0.0};
  switch (kind) {
    case PlanKind::ConstantState:
      break;
    case PlanKind::Classical: {
      for (const auto& w : classical->waves) {
        if (w.kind == WaveKind::Shock) {
          pts.push_back(w.sigma * t);
        } else {
          pts.push_back(w.fan_head * t);
          pts.push_back(w.fan_tail * t);
        }
      }
      break;
    }
    case PlanKind::SingleDelta:
      pts.push_back(atom->x(t));
      break;
    case PlanKind::DeltaThenR2: {
      pts.push_back(atom->x(t));
      const GasState& mid = middle->state;
      pts.push_back((mid.u + law.sound_speed(mid.rho)) * t);
      pts.push_back((data.right.u + law.sound_speed(data.right.rho)) * t);
      break;
    }
    case PlanKind::R1ThenDelta: {
      const GasState& mid = middle->state;
      pts.push_back((data.left.u - law.sound_speed(data.left.rho)) * t);
      pts.push_back((mid.u - law.sound_speed(mid.rho)) * t);
      pts.push_back(atom->x(t));
      break;
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<double> MeasureSolution::t_breakpoints() const {
  std::vector<double> ts;
  if (atom) {
    for (double k : atom->smooth_breakpoints()) ts.push_back(k);
    if (!std::isinf(atom->lifespan())) ts.push_back(atom->lifespan());
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

MeasureSolution::AtomSample MeasureSolution::atom_at(double t) const {
  AtomSample s;
  if (continuation && t > continuation->t_star) {
    s = continuation->plan->atom_at(t - continuation->t_star);
    s.x += continuation->x_star;
    return s;
  }
  if (!atom) return s;
  const double life = atom->lifespan();
  if (t > life || (t == life && !atom->lifespan_closed())) return s;
  s.alive = true;
  s.x = atom->x(t);
  s.w = atom->w_rho(t);
  s.v = atom->xprime(t);
  s.w_m = s.w * s.v;
  return s;
}

std::variant<MeasureSolution, NoMeasureSolution> solve_measure(
    const GasLaw& law, const GasState& U1, const GasState& U2,
    double selection, const SolveOptions& opts) {
  if (!(selection >= 0.0 && selection <= 1.0))
    throw std::invalid_argument("solve_measure: selection must lie in [0,1]");
  const RegionLabel label = classify(law, U1, U2);
  const RiemannData data{U1, U2, 0.0, 0.0};

  switch (label.region) {
    case Region::Coincident:
      return wrap_classical(law, data, label);
    case Region::IV0:
      return make_single_delta(law, data, label, true);
    case Region::IV1:
    case Region::III:
      return make_delta_then_r2(law, U1, U2, label, selection);
    case Region::IV2:
    case Region::II:
      return make_r1_then_delta(law, U1, U2, label, selection);
    case Region::I:
    case Region::V:
      return NoMeasureSolution{
          label,
          "no one- or two-wave solution containing a delta shock exists in "
          "regions I and V, even locally and without the entropy condition"};
    case Region::HalfLineRho1:
      return NoMeasureSolution{
          label,
          "[rho]=0 with [u]>0 admits no delta shock; solutions near this "
          "half-line do not depend continuously on the data"};
    case Region::I0Upper:
    case Region::I0Lower: {
      if (opts.allow_nonentropic)
        return make_single_delta(law, data, label, false);
      return NoMeasureSolution{
          label,
          "a single delta shock exists (a > 0) but violates the "
          "over-compressing entropy condition; rerun with the non-entropic "
          "override to construct it"};
    }
    case Region::OnCurve: {
      switch (*label.curve) {
        case CurveId::D1:
        case CurveId::D2:
          return make_single_delta(law, data, label, true);
        case CurveId::S11:
        case CurveId::S22:
          if (opts.allow_nonentropic)
            return make_single_delta(law, data, label, false);
          return NoMeasureSolution{
              label,
              "the zero-weight delta shock on this branch is a non-Lax "
              "discontinuity and violates the entropy condition"};
        default:
          return wrap_classical(law, data, label);
      }
    }
  }
  return NoMeasureSolution{label, "unclassified data"};
}

MeasureSolution solve_singular(const GasLaw& law, const RiemannData& data,
                               double selection) {
  if (!(data.rho0 > 0.0))
    throw std::domain_error("solve_singular: requires rho0 > 0");
  const RegionLabel label = classify(law, data.left, data.right);
  MeasureSolution sol = make_single_delta(law, data, label, true);
  const DeltaShockPath& path = *sol.atom;
  sol.entropic =
      std::isinf(entropy_interval(law, path, data).valid_until);
  if (std::isinf(path.lifespan())) return sol;
  if (path.extinction().kind == ExtinctionKind::BlowsUp) return sol;  // local only

  // weight extinction with finite front position: continue as a fresh
  // rho0 = 0 problem at (x*, t*); a single entropic delta when the pair
  // allows it, the classical two-wave solution otherwise
  const double t_star = path.lifespan();
  const double x_star = path.x_at_lifespan();
  const GasState U1 = data.left, U2 = data.right;
  auto cont = std::make_shared<MeasureSolution>();
  const RegionLabel sub = classify(law, U1, U2);
  const bool entropic_delta =
      sub.region == Region::IV0 ||
      (sub.region == Region::OnCurve &&
       (*sub.curve == CurveId::D1 || *sub.curve == CurveId::D2));
  if (entropic_delta) {
    *cont = make_single_delta(law, {U1, U2, 0.0, 0.0}, sub, true);
  } else {
    // the continuation is "two waves": classical wherever the pair admits no
    // single entropic delta, composite measure plans included
    *cont = wrap_classical(law, {U1, U2, 0.0, 0.0}, sub);
  }
  (void)selection;  // reserved: continuations are single-delta or classical
  sol.continuation = Continuation{t_star, x_star, cont};
  return sol;
}

MeasureSolution force_single_delta(const GasLaw& law, const RiemannData& data) {
  const RegionLabel label = classify(law, data.left, data.right);
  MeasureSolution sol = make_single_delta(law, data, label, true);
  sol.entropic =
      std::isinf(entropy_interval(law, *sol.atom, data).valid_until);
  return sol;
}

MeasureSolution classical_as_measure(const GasLaw& law,
                                     const RiemannData& data) {
  return wrap_classical(law, data, classify(law, data.left, data.right));
}

SampledProfile sample_solution(const MeasureSolution& sol, double t,
                               double x_lo, double x_hi, int n) {
  if (n < 1) throw std::invalid_argument("sample_solution: need n >= 1");
  if (!(t >= 0.0) || t > sol.validity_end())
    throw std::invalid_argument("sample_solution: time outside validity");
  SampledProfile prof;
  prof.time = t;
  prof.x.resize(n);
  prof.rho.resize(n);
  prof.u.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x =
        n == 1 ? x_lo : x_lo + (x_hi - x_lo) * i / static_cast<double>(n - 1);
    const GasState s = sol.ac_state(x, t);
    prof.x[i] = x;
    prof.rho[i] = s.rho;
    prof.u[i] = s.u;
  }
  const auto a = sol.atom_at(t);
  if (a.alive && a.x >= x_lo && a.x <= x_hi)
    prof.atoms.push_back({a.x, a.w, a.v});
  return prof;
}

const char* to_string(PlanKind k) {
  switch (k) {
    case PlanKind::ConstantState: return "constant";
    case PlanKind::Classical: return "classical";
    case PlanKind::SingleDelta: return "single_delta";
    case PlanKind::DeltaThenR2: return "delta_then_r2";
    case PlanKind::R1ThenDelta: return "r1_then_delta";
  }
  return "?";
}

}  // namespace delta_riemann
