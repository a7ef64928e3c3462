#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "rotor_otto/classical.hpp"
#include "rotor_otto/oracles/oracles.hpp"
#include "rotor_otto/qelectric.hpp"
#include "rotor_otto/qmagnetic.hpp"
#include "rotor_otto/specfun.hpp"

namespace rotor_otto::tools {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double relative(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

CheckResult bessel_series(Rng& rng) {
  CheckResult r{"bessel I0, I1/I0 vs power series", 50, 0.0, 1e-13};
  for (int i = 0; i < r.samples; ++i) {
    const double x = uniform(rng, 0.0, 10.0);
    const double i0 = oracles::bessel_i0_series(x);
    const double i1 = oracles::bessel_i1_series(x);
    r.max_error = std::max({r.max_error, relative(log_bessel_i0(x), std::log(i0)),
                            relative(bessel_ratio_i1_i0(x), i1 / i0)});
  }
  return r;
}

CheckResult classical_quadrature(Rng& rng) {
  CheckResult r{"classical electric energy vs quadrature", 40, 0.0, 1e-10};
  for (int i = 0; i < r.samples; ++i) {
    const double li = uniform(rng, 0.0, 20.0);
    const double lj = uniform(rng, 0.0, 20.0);
    const double tj = uniform(rng, 0.05, 10.0);
    const double got = classical_mean_energy_electric(
        ControlParam(li), ControlParam(lj), ReducedTemperature(tj));
    const double want =
        oracles::classical_electric_energy_quadrature(li, lj, tj);
    r.max_error = std::max(r.max_error, relative(got, want));
  }
  return r;
}

CheckResult theta_vs_direct(Rng& rng) {
  CheckResult r{"magnetic ln Z theta vs direct sum", 200, 0.0, 1e-12};
  for (int i = 0; i < r.samples; ++i) {
    const ControlParam l(uniform(rng, -3.0, 3.0));
    const ReducedTemperature t(uniform(rng, 0.01, 10.0));
    r.max_error = std::max(
        r.max_error, std::abs(quantum_partition_magnetic_theta(l, t) -
                              quantum_partition_magnetic_direct(l, t)));
  }
  return r;
}

CheckResult epsilon_fourier_vs_brute(Rng& rng) {
  CheckResult r{"epsilon Fourier series vs brute sum", 100, 0.0, 1e-10};
  for (int i = 0; i < r.samples; ++i) {
    const double l = uniform(rng, -2.0, 2.0);
    const double t = uniform(rng, 0.05, 5.0);
    r.max_error = std::max(
        r.max_error,
        std::abs(epsilon_fourier(ControlParam(l), ReducedTemperature(t)) -
                 oracles::magnetic_epsilon_brute(l, t)));
  }
  return r;
}

CheckResult dense_vs_tridiagonal(Rng& rng) {
  CheckResult r{"pendulum spectrum dense vs tridiagonal", 10, 0.0, 1e-10};
  for (int i = 0; i < r.samples; ++i) {
    const double l = uniform(rng, 0.0, 20.0);
    const int m = std::uniform_int_distribution<int>(4, 96)(rng);
    const auto h = build_pendulum_hamiltonian(ControlParam(l), m);
    const auto got = eigensolve_sym_tridiagonal(h, false).eigenvalues;
    const auto want = oracles::dense_eigenvalues(h.diag, h.offdiag);
    for (std::size_t k = 0; k < got.size(); ++k) {
      r.max_error = std::max(r.max_error, relative(got[k], want[k]));
    }
  }
  return r;
}

CheckResult hellmann_feynman(Rng& rng) {
  CheckResult r{"<sin^2(a/2)> vs finite-difference d ln Z", 10, 0.0, 1e-6};
  constexpr int kCutoff = 48;
  for (int i = 0; i < r.samples; ++i) {
    const double l = uniform(rng, 0.1, 20.0);
    const double t = uniform(rng, 0.1, 10.0);
    const auto levels = pendulum_levels(ControlParam(l), kCutoff);
    const double got =
        thermal_averages(levels, ReducedTemperature(t)).sin2_half;
    const double want = oracles::pendulum_sin2_finite_difference(l, kCutoff, t);
    r.max_error = std::max(r.max_error, std::abs(got - want));
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed,
                                      std::optional<double> tol) {
  Rng rng(seed);
  std::vector<CheckResult> out;
  out.push_back(bessel_series(rng));
  out.push_back(classical_quadrature(rng));
  out.push_back(theta_vs_direct(rng));
  out.push_back(epsilon_fourier_vs_brute(rng));
  out.push_back(dense_vs_tridiagonal(rng));
  out.push_back(hellmann_feynman(rng));
  if (tol) {
    for (auto& r : out) r.tolerance = *tol;
  }
  return out;
}

void print_table(const std::vector<CheckResult>& results, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-44s %7s %12s %12s  %s\n", "check",
                "samples", "max error", "tolerance", "result");
  out << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-44s %7d %12.3e %12.3e  %s\n",
                  r.name.c_str(), r.samples, r.max_error, r.tolerance,
                  r.passed() ? "PASS" : "FAIL");
    out << line;
  }
}

}  // namespace rotor_otto::tools
