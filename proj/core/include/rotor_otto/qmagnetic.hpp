#ifndef ROTOR_OTTO_QMAGNETIC_HPP_
#define ROTOR_OTTO_QMAGNETIC_HPP_

// Quantum rotor in a perpendicular magnetic field,
// H(lambda) = L^2/2 - lambda L, diagonal in the angular momentum basis with
// levels E_m = m (m - 2 lambda) / 2.
//
// Thermal moments come from a truncated Boltzmann sum over
// m in [floor(lambda) - M, ceil(lambda) + M]. The window half-width M is
// chosen so every omitted level sits more than 40 nats below the most
// populated one. The window is symmetric about lambda whenever lambda is an
// integer or half-integer, which keeps the deviation epsilon exactly odd.
//
// The theta-function partition function and the Fourier series for epsilon
// are closed-form cross-checks of the same sums.

#include "rotor_otto/axis.hpp"
#include "rotor_otto/units.hpp"

namespace rotor_otto {

struct MomentumStats {
  double mean_lz = 0.0;           // <L> / hbar
  double second_moment_lz = 0.0;  // <L^2> / hbar^2
  double epsilon = 0.0;           // <L>/hbar - lambda, |epsilon| <= 1/2
  double log_partition = 0.0;     // ln sum_m exp(-E_m / tau)
  int terms_used = 0;
};

/// Log-weight margin below the peak at which the momentum sum is truncated.
inline constexpr double kMomentumWindowNats = 40.0;

/// ln Z by direct summation over the truncated momentum window.
double quantum_partition_magnetic_direct(ControlParam lambda,
                                         ReducedTemperature tau);

/// ln Z = ln sqrt(2 pi tau) + lambda^2/(2 tau)
///        + ln theta_3(-pi lambda, exp(-2 pi^2 tau)).
double quantum_partition_magnetic_theta(ControlParam lambda,
                                        ReducedTemperature tau);

MomentumStats momentum_stats(ControlParam lambda, ReducedTemperature tau);

/// Partial sum of
///   epsilon = sum_n (-1)^n [2 pi tau / sinh(2 pi^2 n tau)] sin(2 pi n lambda)
/// up to n_max. Throws std::domain_error if n_max < 1.
double epsilon_fourier(ControlParam lambda, ReducedTemperature tau, int n_max);

/// Same series, truncated once the next coefficient drops below 1e-15.
/// Needs O(1/tau) terms; when more than 1e5 would be required the direct
/// Boltzmann sum is used instead.
double epsilon_fourier(ControlParam lambda, ReducedTemperature tau);

/// Quartet from <H_i>_j = <L^2>_j / 2 - lambda_i <L>_j.
MeanEnergyQuartet quantum_quartet_magnetic(const CyclePoint& point);

struct WorkScanGrid {
  Axis lambda_h;
  Axis tau_h;
};

struct OptimalWork {
  CyclePoint point;
  double w_min;
};

/// Grid minimum of the quantum per-cycle work over (lambda_h, tau_h) at fixed
/// cold-stroke parameters. Ties resolve to the first cell in
/// (tau outer, lambda inner) order.
OptimalWork optimal_work_scan(ControlParam lambda_c, ReducedTemperature tau_c,
                              const WorkScanGrid& grid);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_QMAGNETIC_HPP_
