#include "rotor_otto/qmagnetic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rotor_otto/cycle.hpp"
#include "rotor_otto/specfun.hpp"

namespace rotor_otto {

namespace {

using std::numbers::pi;

struct MomentumWindow {
  double first;  // lowest m, integral value
  int size;
};

MomentumWindow momentum_window(double lambda, double tau) {
  // Distance from lambda beyond which (m - lambda)^2 - (l - lambda)^2 exceeds
  // 2 tau * 40 for the nearest integer l.
  const int half = std::max(
      1, static_cast<int>(std::ceil(std::sqrt(2.0 * kMomentumWindowNats * tau +
                                              0.25))));
  const double lo = std::floor(lambda) - half;
  const double hi = std::ceil(lambda) + half;
  return {lo, static_cast<int>(hi - lo) + 1};
}

std::vector<double> momentum_log_weights(double lambda, double tau,
                                         const MomentumWindow& window) {
  std::vector<double> lw(static_cast<std::size_t>(window.size));
  for (int k = 0; k < window.size; ++k) {
    const double m = window.first + k;
    lw[k] = -(m * (m - 2.0 * lambda)) / (2.0 * tau);
  }
  return lw;
}

double epsilon_coefficient(int n, double tau) {
  const double arg = 2.0 * pi * pi * n * tau;
  const double c = 2.0 * pi * tau / std::sinh(arg);
  return (n % 2 == 0) ? c : -c;
}

// sin(2 pi n lambda) with the integer part of n * frac(lambda) removed first.
double sin_two_pi_n(int n, double lambda) {
  const double frac = lambda - std::floor(lambda);
  double t = n * frac;
  t -= std::floor(t);
  if (t == 0.0 || t == 0.5) return 0.0;
  return std::sin(2.0 * pi * t);
}

constexpr int kFourierTermCap = 100000;

MeanEnergyQuartet quartet_from_moments(const MomentumStats& hot,
                                       const MomentumStats& cold, double lh,
                                       double lc) {
  return {
      .hh = 0.5 * hot.second_moment_lz - lh * hot.mean_lz,
      .hc = 0.5 * cold.second_moment_lz - lh * cold.mean_lz,
      .ch = 0.5 * hot.second_moment_lz - lc * hot.mean_lz,
      .cc = 0.5 * cold.second_moment_lz - lc * cold.mean_lz,
  };
}

}  // namespace

double quantum_partition_magnetic_direct(ControlParam lambda,
                                         ReducedTemperature tau) {
  const auto window = momentum_window(lambda.value(), tau.value());
  const auto lw = momentum_log_weights(lambda.value(), tau.value(), window);
  return log_sum_exp(lw);
}

double quantum_partition_magnetic_theta(ControlParam lambda,
                                        ReducedTemperature tau) {
  const double l = lambda.value();
  const double t = tau.value();
  const double theta = jacobi_theta3(ThetaArgs(-pi * l, -2.0 * pi * pi * t));
  return 0.5 * std::log(2.0 * pi * t) + l * l / (2.0 * t) + std::log(theta);
}

MomentumStats momentum_stats(ControlParam lambda, ReducedTemperature tau) {
  const double l = lambda.value();
  const auto window = momentum_window(l, tau.value());
  const auto lw = momentum_log_weights(l, tau.value(), window);
  const double log_z = log_sum_exp(lw);

  // Moments of the offset k = m - first keep the sums well scaled for large
  // |lambda|.
  double norm = 0.0;
  double first = 0.0;
  double second = 0.0;
  for (int k = 0; k < window.size; ++k) {
    const double w = std::exp(lw[k] - log_z);
    norm += w;
    first += w * k;
    second += w * k * k;
  }
  first /= norm;
  second /= norm;

  MomentumStats stats;
  const double base = window.first;
  stats.mean_lz = base + first;
  stats.second_moment_lz = second + 2.0 * base * first + base * base;
  stats.epsilon = (base - l) + first;
  stats.log_partition = log_z;
  stats.terms_used = window.size;
  return stats;
}

double epsilon_fourier(ControlParam lambda, ReducedTemperature tau,
                       int n_max) {
  if (n_max < 1) {
    throw std::domain_error("epsilon_fourier: n_max must be >= 1");
  }
  double sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double c = epsilon_coefficient(n, tau.value());
    if (c == 0.0) break;
    sum += c * sin_two_pi_n(n, lambda.value());
  }
  return sum;
}

double epsilon_fourier(ControlParam lambda, ReducedTemperature tau) {
  constexpr double kCutoff = 1e-15;
  const double t = tau.value();
  // |c_n| ~ 4 pi tau exp(-2 pi^2 n tau) once n tau is of order one.
  const double estimate =
      std::log(std::max(4.0 * pi * t, 1.0) / kCutoff) / (2.0 * pi * pi * t);
  if (estimate > kFourierTermCap) return momentum_stats(lambda, tau).epsilon;

  int n_max = 1;
  while (n_max < kFourierTermCap &&
         std::abs(epsilon_coefficient(n_max + 1, t)) >= kCutoff) {
    ++n_max;
  }
  return epsilon_fourier(lambda, tau, n_max);
}

MeanEnergyQuartet quantum_quartet_magnetic(const CyclePoint& p) {
  return quartet_from_moments(momentum_stats(p.lambda_h, p.tau_h),
                              momentum_stats(p.lambda_c, p.tau_c),
                              p.lambda_h.value(), p.lambda_c.value());
}

OptimalWork optimal_work_scan(ControlParam lambda_c, ReducedTemperature tau_c,
                              const WorkScanGrid& grid) {
  if (grid.lambda_h.count < 1 || grid.tau_h.count < 1) {
    throw std::invalid_argument("optimal_work_scan: empty grid");
  }
  const auto lambdas = grid.lambda_h.values();
  const auto taus = grid.tau_h.values();
  const auto cold = momentum_stats(lambda_c, tau_c);
  const double lc = lambda_c.value();

  double best_w = std::numeric_limits<double>::infinity();
  double best_lambda = lambdas.front();
  double best_tau = taus.front();
  for (double th : taus) {
    const ReducedTemperature tau_h(th);
    if (tau_h < tau_c) {
      throw std::domain_error(
          "optimal_work_scan: hot temperatures must not be below tau_c");
    }
    for (double lh : lambdas) {
      const auto point = make_cycle_point(lh, lc, th, tau_c.value());
      const auto hot = momentum_stats(point.lambda_h, point.tau_h);
      const double w =
          assemble_cycle(quartet_from_moments(hot, cold, lh, lc), point,
                         Machine::Magnetic, Model::Quantum)
              .w;
      if (w < best_w) {
        best_w = w;
        best_lambda = lh;
        best_tau = th;
      }
    }
  }
  return {make_cycle_point(best_lambda, lc, best_tau, tau_c.value()), best_w};
}

}  // namespace rotor_otto
