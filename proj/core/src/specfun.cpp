#include "rotor_otto/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rotor_otto {

namespace {

constexpr double kSeriesLimit = 30.0;

// sum_k (x/2)^{2k} / (k!)^2, all terms positive.
double i0_power_series(double x) {
  const double quarter_x2 = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= quarter_x2 / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// Hankel expansion sum_k (-1)^k a_k(nu) / x^k of I_nu(x) sqrt(2 pi x) e^{-x},
// truncated at the smallest term.
double hankel_series(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    const double mag = std::abs(term);
    if (mag > last) break;
    sum += term;
    if (mag < 1e-17 * std::abs(sum)) break;
    last = mag;
  }
  return sum;
}

// Modified Lentz evaluation of 1 / (2/x + 1 / (4/x + 1 / (6/x + ...))).
double ratio_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = tiny;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 100000; ++k) {
    const double b = 2.0 * k / x;
    d = b + d;
    if (d == 0.0) d = tiny;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return f;
  }
  return f;
}

}  // namespace

double log_bessel_i0(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("log_bessel_i0: argument must be >= 0");
  }
  if (std::isinf(x)) return x;
  if (x <= kSeriesLimit) return std::log(i0_power_series(x));
  return x - 0.5 * std::log(2.0 * std::numbers::pi * x) +
         std::log(hankel_series(0, x));
}

double bessel_ratio_i1_i0(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("bessel_ratio_i1_i0: argument must be >= 0");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x <= kSeriesLimit) return ratio_continued_fraction(x);
  return hankel_series(1, x) / hankel_series(0, x);
}

ThetaArgs::ThetaArgs(double z_, double log_q_) : z(z_), log_q(log_q_) {
  if (!std::isfinite(z_)) {
    throw std::domain_error("theta: phase must be finite");
  }
  if (std::isnan(log_q_) || !(log_q_ < 0.0)) {
    throw std::domain_error("theta: nome must satisfy 0 < q < 1");
  }
}

double jacobi_theta3(const ThetaArgs& args) {
  if (std::isinf(args.log_q)) return 1.0;
  const long double log_q = args.log_q;
  const long double two_z = 2.0L * static_cast<long double>(args.z);

  long double sum = 1.0L;
  long double compensation = 0.0L;
  for (long n = 1;; ++n) {
    const long double nn = static_cast<long double>(n) * n;
    const long double magnitude = 2.0L * std::exp(nn * log_q);
    if (magnitude == 0.0L ||
        magnitude < 1e-16L * std::abs(sum + compensation)) {
      break;
    }
    const long double term = magnitude * std::cos(n * two_z);
    const long double next = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - next) + term;
    } else {
      compensation += (term - next) + sum;
    }
    sum = next;
  }
  return static_cast<double>(sum + compensation);
}

double log_sum_exp(std::span<const double> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  const double peak = *std::max_element(terms.begin(), terms.end());
  if (std::isinf(peak)) return peak;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

}  // namespace rotor_otto
