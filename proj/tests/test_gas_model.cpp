#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "delta_riemann/gas_model.hpp"

using namespace delta_riemann;

TEST_CASE("gas law rejects gamma <= 1") {
  CHECK_THROWS_AS(GasLaw(1.0), std::domain_error);
  CHECK_THROWS_AS(GasLaw(0.5), std::domain_error);
  CHECK_NOTHROW(GasLaw(1.0 + 1e-9));
}

TEST_CASE("pressure examples") {
  CHECK(GasLaw(2.0).pressure(0.0) == 0.0);
  CHECK(GasLaw(2.0).pressure(4.0) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(GasLaw(1.4).pressure(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(GasLaw(2.0).pressure(-1.0), std::domain_error);
}

TEST_CASE("sound speed examples and vacuum rejection") {
  CHECK(GasLaw(2.0).sound_speed(1.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(GasLaw(3.0).sound_speed(1.0) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(GasLaw(2.0).sound_speed(1.5) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(GasLaw(2.0).sound_speed(0.0), std::domain_error);
  CHECK_THROWS_AS(GasLaw(2.0).sound_speed(-1.0), std::domain_error);
}

TEST_CASE("eigenvalues") {
  const GasLaw law(2.0);
  auto [l1, l2] = eigenvalues(law, {0.0, 1.0});
  CHECK(l1 == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(l2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  auto [m1, m2] = eigenvalues(law, {-2.1927, 1.5});
  CHECK(m1 == doctest::Approx(-3.9248).epsilon(1e-4));
  CHECK(m2 == doctest::Approx(-0.4607).epsilon(1e-3));

  auto [k1, k2] = eigenvalues(law, {1.0, 1.0});
  CHECK(k1 == doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(k2 == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(eigenvalues(law, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("strict hyperbolicity and monotonicity over a log grid") {
  for (double g : {1.4, 2.0, 3.0}) {
    const GasLaw law(g);
    double prev_p = -1.0, prev_c = -1.0;
    for (int i = 0; i <= 240; ++i) {
      const double rho = std::pow(10.0, -6.0 + 12.0 * i / 240.0);
      const double p = law.pressure(rho);
      const double c = law.sound_speed(rho);
      CHECK(p > prev_p);
      CHECK(c > prev_c);
      prev_p = p;
      prev_c = c;
      auto [l1, l2] = eigenvalues(law, {0.3, rho});
      CHECK(l1 < l2);
      // c^2 == gamma p / rho
      CHECK(std::abs(c * c - g * p / rho) <= 1e-12 * std::abs(c * c));
    }
  }
}

TEST_CASE("pressure_diff keeps relative accuracy at tangency") {
  const GasLaw law(2.0);
  // p(rho) - p(1) = rho^2 - 1 = (rho-1)(rho+1) exactly comparable
  for (double eps : {1e-7, 1e-9, 1e-12}) {
    const double rho = 1.0 + eps;
    const double exact = eps * (rho + 1.0);
    CHECK(pressure_diff(law, rho, 1.0) ==
          doctest::Approx(exact).epsilon(1e-13));
  }
}
