#pragma once

#include <limits>
#include <optional>
#include <string>

#include "delta_riemann/gas_model.hpp"
#include "delta_riemann/wave_curves.hpp"

namespace delta_riemann {

// Two-state Riemann data plus the optional point mass rho0 >= 0 carried at
// the initial discontinuity with velocity u0.
struct RiemannData {
  GasState left;
  GasState right;
  double rho0 = 0.0;
  double u0 = 0.0;
};

// All jump quantities between a left and a right state and the discriminant
// coefficients a = rho1 rho2 [u]^2 - [rho][p] and b = [rho] u0 - [rho u].
struct Brackets {
  double d_rho = 0.0;   // [rho]
  double d_u = 0.0;     // [u]
  double d_p = 0.0;     // [p]
  double d_m = 0.0;     // [rho u]
  double d_flux = 0.0;  // [rho u^2 + p]
  double a = 0.0;
  double b = 0.0;
};

Brackets brackets(const GasLaw& law, const GasState& U1, const GasState& U2,
                  double u0 = 0.0);

enum class Region {
  I,            // two rarefactions
  I0Upper,      // a > 0 wedge right of the base state, rho2 > rho1 (beyond S22)
  I0Lower,      // a > 0 wedge, rho2 < rho1 (beyond S11)
  HalfLineRho1, // {rho = rho1, u > u1}; solutions lose continuous dependence here
  II,           // R1 + S2
  III,          // S1 + R2
  IV0,          // two strong shocks; single delta shock globally entropic
  IV1,          // between D1 and S1
  IV2,          // between D2 and S2
  V,            // vacuum
  OnCurve,
  Coincident,
};

struct RegionLabel {
  Region region = Region::I;
  std::optional<CurveId> curve;  // set iff region == OnCurve

  bool in_iv() const {
    return region == Region::IV0 || region == Region::IV1 ||
           region == Region::IV2;
  }
  bool in_i0() const {
    return region == Region::I0Upper || region == Region::I0Lower;
  }
};

std::string region_name(const RegionLabel& label);

// Phase-plane classification of U2 relative to U1 by sign tests on the
// closed-form curve values at rho2.  Boundary tolerance (relative, in u) is
// applied before any interior test so curve points label deterministically.
RegionLabel classify(const GasLaw& law, const GasState& U1, const GasState& U2,
                     double tol = 1e-10);

enum class EntropyKind { Always, Until, Never };

struct EntropyVerdict {
  EntropyKind kind = EntropyKind::Never;
  // first time the over-compressing condition u_l >= x' >= u_r fails;
  // meaningful for kind == Until
  double until = std::numeric_limits<double>::infinity();
};

// Existence/lifespan/entropy summary for the single-delta-shock ansatz,
// one row per admissible sign pattern of (a, b, [rho], [u]).
struct ExistenceReport {
  bool exists = false;
  bool global_in_time = false;
  EntropyVerdict entropic;
  std::string case_row;  // matching existence-table row
  std::string reason;    // set when exists == false
};

ExistenceReport delta_existence(const GasLaw& law, const RiemannData& data);

}  // namespace delta_riemann
