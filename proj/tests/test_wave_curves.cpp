#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "delta_riemann/wave_curves.hpp"

using namespace delta_riemann;

namespace {
const GasLaw kLaw(2.0);
const GasState kBase{0.0, 1.0};
}  // namespace

TEST_CASE("closed-form evaluations against hand values") {
  // S22 at rho=4: sqrt(3*15/4) = sqrt(11.25)
  CHECK(eval_curve(kLaw, CurveId::S22, kBase, 4.0) ==
        doctest::Approx(std::sqrt(11.25)).epsilon(1e-14));
  // R2 at rho=4: 2*sqrt(2)*(2-1)
  CHECK(eval_curve(kLaw, CurveId::R2, kBase, 4.0) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  // D1 at rho=4: -sqrt(15)
  CHECK(eval_curve(kLaw, CurveId::D1, kBase, 4.0) ==
        doctest::Approx(-std::sqrt(15.0)).epsilon(1e-14));
  // D2 at rho=0.5: -sqrt(0.75/0.5)
  CHECK(eval_curve(kLaw, CurveId::D2, kBase, 0.5) ==
        doctest::Approx(-std::sqrt(1.5)).epsilon(1e-14));
  // base-point values
  for (CurveId id : {CurveId::S1, CurveId::S22, CurveId::R2, CurveId::D1,
                     CurveId::R1Star, CurveId::D11})
    CHECK(eval_curve(kLaw, id, kBase, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("domain errors identify the restriction") {
  CHECK_THROWS_AS(eval_curve(kLaw, CurveId::S1, kBase, 0.5), std::domain_error);
  CHECK_THROWS_AS(eval_curve(kLaw, CurveId::S2, kBase, 2.0), std::domain_error);
  CHECK_THROWS_AS(eval_curve(kLaw, CurveId::M2, kBase, 1.5), std::domain_error);
  // M-curve lower cutoff rho1/(gamma+1)^(1/gamma) = 1/sqrt(3)
  const double cutoff = 1.0 / std::sqrt(3.0);
  CHECK_NOTHROW(eval_curve(kLaw, CurveId::M1, kBase, cutoff));
  CHECK_THROWS_AS(eval_curve(kLaw, CurveId::M1, kBase, 0.9 * cutoff),
                  std::domain_error);
}

TEST_CASE("sampling is geometric with exact endpoints") {
  // degenerate range collapses to the base point
  const auto two = sample_curve(kLaw, CurveId::S1, kBase, 1.0, 1.0, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].rho == 1.0);
  CHECK(two[0].u == 0.0);
  CHECK(two[1].u == 0.0);

  // R1 over [0.25, 1] with n = 3: rho = 0.25, 0.5, 1
  const auto r1 = sample_curve(kLaw, CurveId::R1, kBase, 0.25, 1.0, 3);
  REQUIRE(r1.size() == 3);
  CHECK(r1[0].u == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r1[1].rho == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r1[1].u ==
        doctest::Approx(2.0 * std::sqrt(2.0) * (1.0 - std::sqrt(0.5)))
            .epsilon(1e-13));
  CHECK(r1[2].u == doctest::Approx(0.0));
  CHECK(r1[0].u > r1[1].u);  // decreasing u toward the base
  CHECK(r1[1].u > r1[2].u);

  const auto d2 = sample_curve(kLaw, CurveId::D2, kBase, 0.5, 1.0, 2);
  CHECK(d2[0].u == doctest::Approx(-std::sqrt(1.5)).epsilon(1e-14));

  CHECK_THROWS_AS(sample_curve(kLaw, CurveId::S1, kBase, 2.0, 1.5, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_curve(kLaw, CurveId::S1, kBase, 1.0, 2.0, 1),
                  std::invalid_argument);
}

TEST_CASE("sample points satisfy eval_curve to 1e-12") {
  for (CurveId id : {CurveId::S1, CurveId::S22, CurveId::R2, CurveId::D1}) {
    for (const auto& p : sample_curve(kLaw, id, kBase, 1.0, 50.0, 33)) {
      CHECK(std::abs(p.u - eval_curve(kLaw, id, kBase, p.rho)) <=
            1e-12 * std::max(1.0, std::abs(p.u)));
    }
  }
}

TEST_CASE("base-point incidence along a shrinking sequence") {
  // S/R curves approach the base linearly in rho - rho1; the D curves are
  // tangent to the line {rho = rho1} and approach like sqrt(rho - rho1), so
  // the witness is a strictly decreasing error sequence whose tail meets the
  // incidence tolerance.
  for (double g : {1.4, 2.0, 3.0}) {
    const GasLaw law(g);
    const GasState base{0.7, 2.0};
    for (CurveId id : {CurveId::S1, CurveId::S11, CurveId::S2, CurveId::S22,
                       CurveId::R1, CurveId::R2, CurveId::R1Star,
                       CurveId::R2Star, CurveId::D1, CurveId::D2,
                       CurveId::D11, CurveId::D21}) {
      const CurveDomain dom = curve_domain(law, id, base);
      const double dir = dom.rho_hi > base.rho ? 1.0 : -1.0;
      double prev = std::numeric_limits<double>::infinity();
      double err = prev;
      // the last step lands on the base abscissa itself: incidence is exact
      for (double eps : {1e-4, 1e-7, 1e-10, 1e-13, 1e-17}) {
        const double rho = base.rho * (1.0 + dir * eps);
        err = std::abs(eval_curve(law, id, base, rho) - base.u);
        const bool shrinking = err < prev || err == 0.0;
        CHECK(shrinking);
        prev = err;
      }
      CHECK(err <= 1e-8);
    }
  }
}

TEST_CASE("orderings and monotonicity on grids") {
  for (double g : {1.4, 2.0, 3.0}) {
    const GasLaw law(g);
    const GasState base{0.0, 1.0};

    double prev_s1 = 1.0, prev_d1 = 1.0, prev_r2 = -1.0;
    for (int i = 1; i <= 400; ++i) {
      const double rho = 1.0 + i * 0.25;
      const double s1 = eval_curve(law, CurveId::S1, base, rho);
      const double d1 = eval_curve(law, CurveId::D1, base, rho);
      const double r2 = eval_curve(law, CurveId::R2, base, rho);
      const double s22 = eval_curve(law, CurveId::S22, base, rho);
      CHECK(d1 < s1);        // D1 strictly below S1
      CHECK(r2 < s22);       // H(rho) < 0
      CHECK(s1 < prev_s1);   // S1 strictly decreasing
      CHECK(d1 < prev_d1);   // D1 strictly decreasing
      CHECK(r2 > prev_r2);   // R2 strictly increasing
      prev_s1 = s1;
      prev_d1 = d1;
      prev_r2 = r2;
    }

    // M2 sits strictly right of D2 inside (rho1/(gamma+1)^(1/gamma), rho1);
    // the two curves meet at both interval ends
    // both offsets vanish like sqrt at the pinch, so the meeting point is
    // resolved to sqrt(ulp) only
    const double lo = 1.0 / std::pow(g + 1.0, 1.0 / g);
    CHECK(std::abs(eval_curve(law, CurveId::M2, base, lo) -
                   eval_curve(law, CurveId::D2, base, lo)) <= 1e-7);
    for (int i = 1; i < 200; ++i) {
      const double rho = lo + (1.0 - 1e-9 - lo) * i / 199.0;
      const double m2 = eval_curve(law, CurveId::M2, base, rho);
      const double d2 = eval_curve(law, CurveId::D2, base, rho);
      CHECK(m2 > d2);
    }

    // R1 strictly decreasing in rho
    double prev_r1 = -10.0;
    for (int i = 200; i >= 1; --i) {
      const double rho = i * 0.005;
      const double r1 = eval_curve(law, CurveId::R1, base, rho);
      CHECK(r1 > prev_r1);
      prev_r1 = r1;
    }
  }
}

TEST_CASE("on_curve membership with tolerance") {
  const double u = eval_curve(kLaw, CurveId::S1, kBase, 3.0);
  CHECK(on_curve(kLaw, CurveId::S1, kBase, {u, 3.0}));
  CHECK(on_curve(kLaw, CurveId::S1, kBase, {u + 5e-11, 3.0}));
  CHECK_FALSE(on_curve(kLaw, CurveId::S1, kBase, {u + 1e-6, 3.0}));
  CHECK_FALSE(on_curve(kLaw, CurveId::S1, kBase, {u, 0.5}));  // outside domain
}

TEST_CASE("curve names round-trip") {
  for (int i = 0; i <= static_cast<int>(CurveId::D21); ++i) {
    const CurveId id = static_cast<CurveId>(i);
    CHECK(curve_from_name(curve_name(id)) == id);
  }
  CHECK_THROWS_AS(curve_from_name("Q9"), std::invalid_argument);
}
