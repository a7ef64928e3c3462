#include "rotor_otto/oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/quadrature/trapezoidal.hpp>

namespace rotor_otto::oracles {

double bessel_i0_series(double x, int terms) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) term *= (0.5 * x) * (0.5 * x) / (double(k) * k);
    sum += term;
  }
  return sum;
}

double bessel_i1_series(double x, int terms) {
  double sum = 0.0;
  double term = 0.5 * x;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) term *= (0.5 * x) * (0.5 * x) / (double(k) * (k + 1));
    sum += term;
  }
  return sum;
}

double classical_electric_energy_quadrature(double lambda_i, double lambda_j,
                                            double tau_j) {
  using boost::math::quadrature::trapezoidal;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto potential = [](double alpha) {
    const double s = std::sin(0.5 * alpha);
    return s * s;
  };
  // Shifting the exponent by its minimum (0) keeps weights in (0, 1].
  auto weight = [&](double alpha) {
    return std::exp(-lambda_j * potential(alpha) / tau_j);
  };
  const double norm = trapezoidal(weight, 0.0, two_pi, 1e-14);
  const double moment = trapezoidal(
      [&](double a) { return potential(a) * weight(a); }, 0.0, two_pi, 1e-14);
  return 0.5 * tau_j + lambda_i * moment / norm;
}

std::vector<double> dense_eigenvalues(std::span<const double> diag,
                                      std::span<const double> offdiag) {
  // Extended precision keeps the dense solver's O(n eps |A|) error well
  // below the double-precision result it is compared with.
  using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = static_cast<Eigen::Index>(diag.size());
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = diag[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    a(i, i + 1) = offdiag[i];
    a(i + 1, i) = offdiag[i];
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

double pendulum_log_partition_dense(double lambda, int cutoff_m, double tau) {
  const int n = 2 * cutoff_m + 1;
  std::vector<double> diag(n);
  for (int k = 0; k < n; ++k) {
    const double m = k - cutoff_m;
    diag[k] = 0.5 * m * m + 0.5 * lambda;
  }
  const std::vector<double> off(n - 1, -0.25 * lambda);
  const auto ev = dense_eigenvalues(diag, off);
  double sum = 0.0;
  for (double e : ev) sum += std::exp(-(e - ev.front()) / tau);
  return -ev.front() / tau + std::log(sum);
}

double pendulum_sin2_finite_difference(double lambda, int cutoff_m, double tau,
                                       double h) {
  const double up = pendulum_log_partition_dense(lambda + h, cutoff_m, tau);
  const double down = pendulum_log_partition_dense(lambda - h, cutoff_m, tau);
  return -tau * (up - down) / (2.0 * h);
}

namespace {

struct Brute {
  double log_z;
  double mean;
};

Brute magnetic_brute(double lambda, double tau, int m_max) {
  double peak = -INFINITY;
  for (int m = -m_max; m <= m_max; ++m) {
    peak = std::max(peak, -m * (m - 2.0 * lambda) / (2.0 * tau));
  }
  double z = 0.0;
  double first = 0.0;
  for (int m = -m_max; m <= m_max; ++m) {
    const double w = std::exp(-m * (m - 2.0 * lambda) / (2.0 * tau) - peak);
    z += w;
    first += w * m;
  }
  return {peak + std::log(z), first / z};
}

}  // namespace

double magnetic_log_partition_brute(double lambda, double tau, int m_max) {
  return magnetic_brute(lambda, tau, m_max).log_z;
}

double magnetic_epsilon_brute(double lambda, double tau, int m_max) {
  return magnetic_brute(lambda, tau, m_max).mean - lambda;
}

}  // namespace rotor_otto::oracles
