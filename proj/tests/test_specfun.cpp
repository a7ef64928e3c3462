#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rotor_otto/oracles/oracles.hpp"
#include "rotor_otto/specfun.hpp"

using namespace rotor_otto;

namespace {

// Reference values computed at 40 significant digits with mpmath.
constexpr double kI0At1 = 1.2660658777520083356;
constexpr double kRatioAt1 = 0.44638996589653450705;
constexpr double kRatioAt50 = 0.98994896737849775259;
constexpr double kLogI0At500 = 495.97400766810669646;

}  // namespace

TEST_CASE("log I0 reference values") {
  CHECK(log_bessel_i0(0.0) == 0.0);
  CHECK(log_bessel_i0(1.0) == doctest::Approx(std::log(kI0At1)).epsilon(1e-15));
  CHECK(log_bessel_i0(500.0) == doctest::Approx(kLogI0At500).epsilon(1e-15));
  // Leading asymptotic form e^x / sqrt(2 pi x).
  const double asym = 500.0 - 0.5 * std::log(2.0 * std::numbers::pi * 500.0);
  CHECK(std::abs(log_bessel_i0(500.0) - asym) / asym < 1e-6);
  CHECK(std::isfinite(log_bessel_i0(1e6)));
  CHECK_THROWS_AS(log_bessel_i0(-1.0), std::domain_error);
}

TEST_CASE("log I0 against the power-series oracle on [0, 15]") {
  for (int k = 0; k <= 150; ++k) {
    const double x = 0.1 * k;
    const double series = oracles::bessel_i0_series(x, 60);
    CAPTURE(x);
    CHECK(std::abs(std::exp(log_bessel_i0(x)) - series) / series < 1e-13);
  }
}

TEST_CASE("I1/I0 ratio reference values") {
  CHECK(bessel_ratio_i1_i0(0.0) == 0.0);
  CHECK(bessel_ratio_i1_i0(1.0) == doctest::Approx(kRatioAt1).epsilon(1e-15));
  CHECK(bessel_ratio_i1_i0(50.0) == doctest::Approx(kRatioAt50).epsilon(1e-15));
  // Three asymptotic terms; the two-term form is 1.03e-6 away from the exact
  // value and cannot meet this tolerance.
  CHECK(std::abs(bessel_ratio_i1_i0(50.0) -
                 (1.0 - 1.0 / 100 - 1.0 / 20000 - 1.0 / 1000000)) < 1e-6);
  CHECK(bessel_ratio_i1_i0(1.0) ==
        doctest::Approx(oracles::bessel_i1_series(1.0) /
                        oracles::bessel_i0_series(1.0))
            .epsilon(1e-15));
  CHECK_THROWS_AS(bessel_ratio_i1_i0(-0.5), std::domain_error);
}

TEST_CASE("I1/I0 is continuous across the evaluation split") {
  for (double x : {14.999999, 15.0, 29.999999, 30.0, 30.000001}) {
    const double series =
        oracles::bessel_i1_series(x, 120) / oracles::bessel_i0_series(x, 120);
    CAPTURE(x);
    CHECK(bessel_ratio_i1_i0(x) == doctest::Approx(series).epsilon(1e-14));
  }
}

TEST_CASE("I1/I0 is strictly increasing and inside [0, 1)") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(0.0, 200.0);
  for (int i = 0; i < 2000; ++i) {
    double a = dist(rng);
    double b = dist(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const double ra = bessel_ratio_i1_i0(a);
    const double rb = bessel_ratio_i1_i0(b);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(ra < rb);
    CHECK(ra >= 0.0);
    CHECK(rb < 1.0);
  }
}

TEST_CASE("theta3 values") {
  SUBCASE("q -> 0") {
    CHECK(jacobi_theta3(ThetaArgs(1.234, -INFINITY)) == 1.0);
    CHECK(jacobi_theta3(ThetaArgs(0.7, -800.0)) == 1.0);
  }
  SUBCASE("z = 0, q = 0.1") {
    CHECK(jacobi_theta3(ThetaArgs(0.0, std::log(0.1))) ==
          doctest::Approx(1.2002000020000002).epsilon(1e-15));
  }
  SUBCASE("log q must be negative") {
    CHECK_THROWS_AS(ThetaArgs(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(ThetaArgs(0.0, 0.5), std::domain_error);
  }
}

TEST_CASE("theta3 is pi-periodic in z") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> z_dist(-4.0, 4.0);
  std::uniform_real_distribution<double> q_dist(-5.0, -0.05);
  for (int i = 0; i < 500; ++i) {
    const double z = z_dist(rng);
    const double lq = q_dist(rng);
    const double a = jacobi_theta3(ThetaArgs(z, lq));
    const double b = jacobi_theta3(ThetaArgs(z + std::numbers::pi, lq));
    CAPTURE(z);
    CAPTURE(lq);
    CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("log-sum-exp") {
  const std::vector<double> zero{0.0};
  CHECK(log_sum_exp(zero) == 0.0);
  const std::vector<double> small{std::log(2.0), std::log(3.0)};
  CHECK(log_sum_exp(small) == doctest::Approx(std::log(5.0)).epsilon(1e-15));
  const std::vector<double> big{1000.0, 1000.0};
  CHECK(log_sum_exp(big) ==
        doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
  const std::vector<double> tiny{-1000.0, -1001.0};
  CHECK(log_sum_exp(tiny) ==
        doctest::Approx(-1000.0 + std::log1p(std::exp(-1.0))).epsilon(1e-15));
  CHECK_THROWS_AS(log_sum_exp(std::vector<double>{}), std::invalid_argument);
}
