#ifndef ROTOR_OTTO_SPECFUN_HPP_
#define ROTOR_OTTO_SPECFUN_HPP_

#include <span>

namespace rotor_otto {

/// ln I0(x) for x >= 0. Power series below x = 30, Hankel asymptotic
/// expansion above; relative error of I0 below 1e-13 everywhere.
double log_bessel_i0(double x);

/// I1(x) / I0(x) for x >= 0, without forming either function.
/// Gauss continued fraction (modified Lentz) below x = 30, ratio of the
/// asymptotic expansions above. Result lies in [0, 1).
double bessel_ratio_i1_i0(double x);

/// Argument of the Jacobi theta function. The nome is carried as
/// log_q = ln q < 0 so that q = exp(-2 pi^2 tau) never underflows;
/// log_q = -inf stands for q -> 0+.
struct ThetaArgs {
  ThetaArgs(double z, double log_q);

  double z;
  double log_q;
};

/// theta_3(z, q) = 1 + 2 sum_{n>=1} q^{n^2} cos(2 n z).
///
/// Summed in extended precision with compensation, since near
/// z = pi/2 and q -> 1 the result is many orders of magnitude smaller than
/// its largest terms.
double jacobi_theta3(const ThetaArgs& args);

/// ln sum exp(terms). Throws std::invalid_argument on an empty sequence.
double log_sum_exp(std::span<const double> terms);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_SPECFUN_HPP_
