#ifndef ROTOR_OTTO_CLASSICAL_HPP_
#define ROTOR_OTTO_CLASSICAL_HPP_

// Classical planar rotor in thermal equilibrium.
//
// Electric machine: H = L^2/2 + lambda sin^2(alpha/2). Integrating out the
// Gaussian momentum leaves a von Mises angle distribution, so every mean
// energy reduces to the Bessel ratio R(x) = I1(x)/I0(x) at x = lambda/(2 tau).
//
// Magnetic machine: H = L^2/2 - lambda L. The momentum is Gaussian with
// mean lambda and variance tau, so the cycle never produces useful output.

#include "rotor_otto/units.hpp"

namespace rotor_otto {

/// x_j = lambda_j / (2 tau_j).
struct BesselArgument {
  BesselArgument(ControlParam lambda, ReducedTemperature tau);

  double x;
};

/// <H(lambda_i)> in the classical Gibbs state of (lambda_j, tau_j):
/// tau_j/2 + (lambda_i/2)(1 - R(x_j)). Requires lambda_i, lambda_j >= 0.
double classical_mean_energy_electric(ControlParam lambda_i,
                                      ControlParam lambda_j,
                                      ReducedTemperature tau_j);

/// tau_j/2 + (lambda_j/2)(lambda_j - 2 lambda_i).
double classical_mean_energy_magnetic(ControlParam lambda_i,
                                      ControlParam lambda_j,
                                      ReducedTemperature tau_j);

MeanEnergyQuartet classical_cycle_electric(const CyclePoint& point);
MeanEnergyQuartet classical_cycle_magnetic(const CyclePoint& point);

/// W < 0  <=>  tau_h/tau_c > lambda_h/lambda_c > 1.
bool classical_engine_condition_electric(const CyclePoint& point);

/// Q_c > 0  <=>  R(x_h) - R(x_c) > (tau_h - tau_c) / lambda_c.
bool classical_fridge_condition_electric(const CyclePoint& point);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_CLASSICAL_HPP_
