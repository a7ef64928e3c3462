#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rotor_otto/cycle.hpp"
#include "rotor_otto/oracles/oracles.hpp"
#include "rotor_otto/qmagnetic.hpp"

using namespace rotor_otto;

namespace {

double log_z_direct(double l, double t) {
  return quantum_partition_magnetic_direct(ControlParam(l),
                                           ReducedTemperature(t));
}

double log_z_theta(double l, double t) {
  return quantum_partition_magnetic_theta(ControlParam(l),
                                          ReducedTemperature(t));
}

MomentumStats stats(double l, double t) {
  return momentum_stats(ControlParam(l), ReducedTemperature(t));
}

double epsilon(double l, double t) { return stats(l, t).epsilon; }

CycleReport quantum(double lh, double lc, double th, double tc) {
  return evaluate_cycle(Machine::Magnetic, Model::Quantum,
                        make_cycle_point(lh, lc, th, tc));
}

}  // namespace

TEST_CASE("partition function reference values") {
  // mpmath, 40 digits, explicit sum over |m| <= 60.
  CHECK(log_z_direct(0.3, 1.0) ==
        doctest::Approx(0.96393853155125383224).epsilon(1e-14));
  CHECK(log_z_direct(0.3, 0.05) ==
        doctest::Approx(0.018150038429576076193).epsilon(1e-13));
  CHECK(log_z_theta(0.3, 1.0) ==
        doctest::Approx(0.96393853155125383224).epsilon(1e-12));
  CHECK(log_z_theta(0.3, 0.05) ==
        doctest::Approx(0.018150038429576076193).epsilon(1e-12));
}

TEST_CASE("partition function limits") {
  SUBCASE("only m = 0 survives at lambda = 0, tau -> 0") {
    CHECK(std::abs(log_z_direct(0.0, 1e-4)) < 1e-300);
  }
  SUBCASE("half-integer lambda has a degenerate doublet") {
    CHECK(log_z_direct(0.5, 0.01) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
  }
  SUBCASE("high temperature approaches the classical form") {
    for (double t : {2.0, 5.0, 20.0}) {
      const double classical =
          0.5 * std::log(2.0 * std::numbers::pi * t) + 0.3 * 0.3 / (2.0 * t);
      CHECK(std::abs(log_z_theta(0.3, t) - classical) <
            2.0 * std::exp(-2.0 * std::numbers::pi * std::numbers::pi * t));
    }
  }
  SUBCASE("brute-force summation agrees") {
    for (double l : {-1.7, 0.0, 0.3, 0.5, 2.25}) {
      for (double t : {0.01, 0.2, 3.0}) {
        CAPTURE(l);
        CAPTURE(t);
        CHECK(std::abs(log_z_direct(l, t) -
                       oracles::magnetic_log_partition_brute(l, t)) < 1e-12);
      }
    }
  }
}

TEST_CASE("integer shift of lambda") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lam(-2.0, 2.0);
  std::uniform_real_distribution<double> tau(0.01, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double l = lam(rng);
    const double t = tau(rng);
    const double shift = ((l + 1) * (l + 1) - l * l) / (2 * t);
    CAPTURE(l);
    CAPTURE(t);
    CHECK(log_z_direct(l + 1, t) - log_z_direct(l, t) ==
          doctest::Approx(shift).epsilon(1e-12));
    CHECK(std::abs(epsilon(l + 1, t) - epsilon(l, t)) < 1e-12);
  }
}

TEST_CASE("epsilon is odd in lambda") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  std::uniform_real_distribution<double> tau(0.01, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double l = lam(rng);
    const double t = tau(rng);
    CHECK(std::abs(epsilon(-l, t) + epsilon(l, t)) < 1e-12);
  }
}

TEST_CASE("momentum statistics") {
  SUBCASE("epsilon vanishes at integers and half-integers") {
    for (double l : {0.0, 0.5, 1.0, 1.5, -2.5}) {
      for (double t : {0.001, 0.01, 0.1, 0.5, 3.0}) {
        CAPTURE(l);
        CAPTURE(t);
        CHECK(std::abs(epsilon(l, t)) < 1e-12);
      }
    }
  }
  SUBCASE("nearly pure momentum state at low temperature") {
    const auto s = stats(0.25, 0.001);
    CHECK(std::abs(s.mean_lz) < 1e-12);
    CHECK(s.epsilon == doctest::Approx(-0.25).epsilon(1e-12));
  }
  SUBCASE("quantum deviation is invisible at tau = 0.5") {
    CHECK(std::abs(epsilon(0.25, 0.5)) < 5e-4);
    // mpmath, 40 digits.
    CHECK(epsilon(0.25, 0.5) ==
          doctest::Approx(-3.2498636359630737880e-4).epsilon(1e-10));
    CHECK(epsilon(0.25, 0.1) ==
          doctest::Approx(-0.17469089691832935851).epsilon(1e-12));
  }
  SUBCASE("bounds and variance") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> lam(-5.0, 5.0);
    std::uniform_real_distribution<double> log_tau(std::log(1e-4), std::log(10.0));
    for (int i = 0; i < 500; ++i) {
      const auto s = stats(lam(rng), std::exp(log_tau(rng)));
      CHECK(std::abs(s.epsilon) <= 0.5 + 1e-12);
      CHECK(s.second_moment_lz - s.mean_lz * s.mean_lz >= -1e-12);
      CHECK(s.terms_used >= 3);
    }
  }
  SUBCASE("sign of epsilon at low temperature") {
    CHECK(epsilon(0.1, 0.01) < 0.0);
    CHECK(epsilon(0.4, 0.01) < 0.0);
    CHECK(epsilon(0.6, 0.01) > 0.0);
    CHECK(epsilon(0.9, 0.01) > 0.0);
  }
  SUBCASE("brute-force epsilon") {
    for (double l : {0.1, 0.37, 0.81, 2.6}) {
      for (double t : {0.01, 0.3, 4.0}) {
        CHECK(std::abs(epsilon(l, t) - oracles::magnetic_epsilon_brute(l, t)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("Fourier series for epsilon") {
  SUBCASE("sines vanish at integers and half-integers") {
    for (double l : {0.0, 0.5, 1.0, 7.5}) {
      CHECK(epsilon_fourier(ControlParam(l), ReducedTemperature(0.2), 50) ==
            0.0);
    }
  }
  SUBCASE("agrees with the direct sum for tau >= 0.05") {
    for (double l : {0.1, 0.25, 0.33, 0.8, 1.45}) {
      for (double t : {0.05, 0.1, 0.4, 2.0}) {
        CAPTURE(l);
        CAPTURE(t);
        CHECK(std::abs(epsilon_fourier(ControlParam(l), ReducedTemperature(t)) -
                       epsilon(l, t)) < 1e-10);
      }
    }
  }
  SUBCASE("low-temperature limit approaches the sawtooth") {
    const double v =
        epsilon_fourier(ControlParam(0.3), ReducedTemperature(1e-3));
    CHECK(v == doctest::Approx(-0.3).epsilon(1e-9));
  }
  SUBCASE("n_max must be positive") {
    CHECK_THROWS_AS(
        epsilon_fourier(ControlParam(0.3), ReducedTemperature(0.1), 0),
        std::domain_error);
  }
}

TEST_CASE("quantum magnetic cycle") {
  SUBCASE("degenerate cycle") {
    const auto r = quantum(0.3, 0.3, 0.7, 0.7);
    CHECK(r.w == 0.0);
    CHECK(r.q_c == 0.0);
    CHECK(r.q_h == 0.0);
  }
  SUBCASE("classical regime produces no work") {
    for (double lh : {-1.0, 0.1, 0.4, 2.3}) {
      for (double lc : {0.0, 0.485, 1.7}) {
        CHECK(quantum(lh, lc, 5.0, 2.0).w >= -1e-6);
      }
    }
  }
  SUBCASE("work in terms of epsilon") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> lam(-2.0, 2.0);
    std::uniform_real_distribution<double> tau(0.001, 3.0);
    for (int i = 0; i < 200; ++i) {
      const double lh = lam(rng);
      const double lc = lam(rng);
      double th = tau(rng);
      double tc = tau(rng);
      if (tc > th) std::swap(th, tc);
      const auto r = quantum(lh, lc, th, tc);
      const double expected = (lc - lh) * (lc - lh) +
                              (lc - lh) * (epsilon(lc, tc) - epsilon(lh, th));
      CHECK(std::abs(r.w - expected) < 1e-10);
      CHECK(std::abs(r.w + r.q_c + r.q_h) < 1e-12);
    }
  }
  SUBCASE("working point of the low-temperature engine") {
    const auto r = quantum(0.25, 0.485, 1.0, 0.001);
    CHECK(r.mode == Mode::Engine);
    // mpmath, 40 digits.
    CHECK(r.w == doctest::Approx(-0.058749920212591479422).epsilon(1e-12));
    CHECK(std::abs(r.w / -0.05875 - 1.0) < 0.05);
  }
}

TEST_CASE("optimal work scan") {
  const WorkScanGrid grid{{0.15, 0.35, 201, AxisScale::Linear},
                          {0.2, 2.0, 50, AxisScale::Linear}};
  SUBCASE("lambda_c = 0.485") {
    const auto best =
        optimal_work_scan(ControlParam(0.485), ReducedTemperature(1e-3), grid);
    CHECK(std::abs(best.point.lambda_h.value() - 0.25) < 0.01);
    CHECK(best.point.tau_h.value() >= 0.2);
    CHECK(best.w_min < -0.055);
  }
  SUBCASE("lambda_c = 0.49 gets close to the E/16 bound") {
    const auto best =
        optimal_work_scan(ControlParam(0.49), ReducedTemperature(1e-4), grid);
    // Frozen from an independent direct-sum evaluation.
    CHECK(best.w_min == doctest::Approx(-0.060025).epsilon(1e-4));
    CHECK(best.point.lambda_h.value() == doctest::Approx(0.245).epsilon(1e-12));
    CHECK(best.w_min > -1.0 / 16);
  }
  SUBCASE("mirror image above one half") {
    const double lc = 0.51;
    const auto upper = quantum((1 + lc) / 2, lc, 1.0, 1e-3);
    const auto lower = quantum((1 - lc) / 2, 1 - lc, 1.0, 1e-3);
    CHECK(std::abs(upper.w - lower.w) < 1e-8);
  }
  SUBCASE("empty grid") {
    const WorkScanGrid bad{{0.15, 0.35, 0, AxisScale::Linear},
                           {0.2, 2.0, 50, AxisScale::Linear}};
    CHECK_THROWS_AS(
        optimal_work_scan(ControlParam(0.485), ReducedTemperature(1e-3), bad),
        std::invalid_argument);
  }
  SUBCASE("hot axis below the cold temperature") {
    const WorkScanGrid bad{{0.15, 0.35, 5, AxisScale::Linear},
                           {1e-4, 2.0, 5, AxisScale::Linear}};
    CHECK_THROWS_AS(
        optimal_work_scan(ControlParam(0.485), ReducedTemperature(1e-3), bad),
        std::domain_error);
  }
}
