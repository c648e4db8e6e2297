#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "delta_riemann/classifier.hpp"
#include "delta_riemann/wave_curves.hpp"

using namespace delta_riemann;

namespace {
const GasLaw kLaw(2.0);
}

TEST_CASE("bracket examples") {
  // symmetric collision
  Brackets jb = brackets(kLaw, {1.0, 1.0}, {-1.0, 1.0}, 0.0);
  CHECK(jb.d_rho == 0.0);
  CHECK(jb.d_u == -2.0);
  CHECK(jb.a == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(jb.d_m == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(jb.b == doctest::Approx(2.0).epsilon(1e-14));

  jb = brackets(kLaw, {2.0, 1.0}, {-2.0, 4.0}, 0.0);
  CHECK(jb.d_rho == 3.0);
  CHECK(jb.d_u == -4.0);
  CHECK(jb.d_p == doctest::Approx(15.0).epsilon(1e-14));
  CHECK(jb.a == doctest::Approx(19.0).epsilon(1e-14));
  CHECK(jb.d_m == doctest::Approx(-10.0).epsilon(1e-14));

  jb = brackets(kLaw, {0.3, 2.0}, {0.3, 2.0}, 7.0);
  CHECK(jb.d_rho == 0.0);
  CHECK(jb.d_u == 0.0);
  CHECK(jb.a == 0.0);
  CHECK(jb.b == 0.0);

  CHECK_THROWS_AS(brackets(kLaw, {0.0, 0.0}, {0.0, 1.0}, 0.0),
                  std::domain_error);
}

TEST_CASE("a-consistency and symmetry properties") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uu(-3.0, 3.0), ur(0.1, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const GasState U1{uu(rng), ur(rng)};
    const GasState U2{uu(rng), ur(rng)};
    const Brackets jb = brackets(kLaw, U1, U2, uu(rng));
    const double alt = jb.d_m * jb.d_m - jb.d_rho * jb.d_flux;
    const double scale = std::max(
        {std::abs(jb.a), jb.d_m * jb.d_m, std::abs(jb.d_rho * jb.d_flux), 1.0});
    CHECK(std::abs(jb.a - alt) <= 1e-12 * scale);
    // a is symmetric under swapping the states
    const Brackets swapped = brackets(kLaw, U2, U1, 0.0);
    CHECK(jb.a == doctest::Approx(swapped.a).epsilon(1e-13));
  }
}

TEST_CASE("classification examples") {
  CHECK(classify(kLaw, {0.0, 1.0}, {0.0, 4.0}).region == Region::III);
  CHECK(classify(kLaw, {0.0, 1.0}, {6.0, 1.0}).region == Region::V);
  CHECK(classify(kLaw, {0.0, 1.0}, {-3.0, 1.0}).region == Region::IV0);
  CHECK(classify(kLaw, {0.0, 1.0}, {0.0, 1.0}).region == Region::Coincident);
  // just inside / outside the vacuum threshold 4*sqrt(2) on the rho1-line
  CHECK(classify(kLaw, {0.0, 1.0}, {5.6568, 1.0}).region ==
        Region::HalfLineRho1);
  CHECK(classify(kLaw, {0.0, 1.0}, {5.657, 1.0}).region == Region::V);
}

TEST_CASE("every region label is reachable") {
  const GasState U1{0.0, 1.0};
  // d1(2) = -sqrt(3), s1(2) = -sqrt(1.5), r2(2) ~ 1.172, s22(2) = sqrt(1.5)
  CHECK(classify(kLaw, U1, {-1.4, 2.0}).region == Region::IV1);
  CHECK(classify(kLaw, U1, {-0.9, 0.5}).region == Region::IV2);
  CHECK(classify(kLaw, U1, {0.5, 0.5}).region == Region::II);
  CHECK(classify(kLaw, U1, {1.2, 2.0}).region == Region::I);
  CHECK(classify(kLaw, U1, {4.0, 2.0}).region == Region::I0Upper);
  CHECK(classify(kLaw, U1, {3.0, 0.3}).region == Region::I0Lower);
}

TEST_CASE("points generated on curves label OnCurve, never interior") {
  for (CurveId id : {CurveId::S1, CurveId::S2, CurveId::R1, CurveId::R2,
                     CurveId::S11, CurveId::S22, CurveId::D1, CurveId::D2}) {
    const bool above = id == CurveId::S1 || id == CurveId::S22 ||
                       id == CurveId::R2 || id == CurveId::D1;
    const double lo = above ? 1.02 : 0.35;
    const double hi = above ? 9.0 : 0.98;
    for (const auto& p : sample_curve(kLaw, id, {0.0, 1.0}, lo, hi, 17)) {
      const RegionLabel label = classify(kLaw, {0.0, 1.0}, {p.u, p.rho});
      REQUIRE(label.region == Region::OnCurve);
      CHECK(*label.curve == id);
    }
  }
}

TEST_CASE("delta existence examples") {
  // strong two-shock data: global and entropic forever
  ExistenceReport rep =
      delta_existence(kLaw, {{2.0, 1.0}, {-2.0, 4.0}, 0.0, 0.0});
  CHECK(rep.exists);
  CHECK(rep.global_in_time);
  CHECK(rep.entropic.kind == EntropyKind::Always);

  // a = -45 < 0: no delta shock at all
  rep = delta_existence(kLaw, {{0.0, 1.0}, {0.0, 4.0}, 0.0, 0.0});
  CHECK_FALSE(rep.exists);
  CHECK_FALSE(rep.global_in_time);
  CHECK(rep.entropic.kind == EntropyKind::Never);
  CHECK(rep.case_row == "a_negative");

  // 0 < a < rho1^2 [u]^2: exists globally but never entropic
  rep = delta_existence(kLaw, {{0.0, 1.0}, {-std::sqrt(2.0), 2.0}, 0.0, 0.0});
  CHECK(rep.exists);
  CHECK(rep.global_in_time);
  CHECK(rep.entropic.kind == EntropyKind::Never);

  // coincident states with a point mass: constant weight
  rep = delta_existence(kLaw, {{0.4, 1.3}, {0.4, 1.3}, 1.0, 0.4});
  CHECK(rep.exists);
  CHECK(rep.global_in_time);
  CHECK(rep.entropic.kind == EntropyKind::Always);
  CHECK(rep.case_row == "rho0>0 [rho]=0 [u]=0");
}

TEST_CASE("classifier/algebra consistency on random pairs") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> uu(-6.0, 6.0);
  std::uniform_real_distribution<double> lr(-2.0, 2.0);
  int iv0_count = 0, exists_count = 0;
  for (int i = 0; i < 10000; ++i) {
    const GasState U1{uu(rng), std::exp(lr(rng))};
    const GasState U2{uu(rng), std::exp(lr(rng))};
    const RegionLabel label = classify(kLaw, U1, U2);
    if (label.region == Region::OnCurve) continue;  // measure-zero fencepost
    const ExistenceReport rep = delta_existence(kLaw, {U1, U2, 0.0, 0.0});

    // IV0 <=> globally entropic single delta
    const bool in_iv0 = label.region == Region::IV0;
    const bool entropic_always = rep.entropic.kind == EntropyKind::Always;
    if (in_iv0) ++iv0_count;
    CHECK(in_iv0 == entropic_always);

    // I0 u IV (minus the half-line) <=> delta exists
    const bool in_existence = label.in_i0() || label.in_iv();
    CHECK(in_existence == rep.exists);

    if (rep.exists) ++exists_count;
  }
  CHECK(iv0_count > 100);  // the sample genuinely hits the region
  CHECK(exists_count > 1000);
}
