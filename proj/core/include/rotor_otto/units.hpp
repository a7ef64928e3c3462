#ifndef ROTOR_OTTO_UNITS_HPP_
#define ROTOR_OTTO_UNITS_HPP_

// Reduced-unit value types shared by every machine model.
//
// Energies are measured in the rotational quantum E = hbar^2 / I,
// temperatures as tau = k_B T / E and angular momenta in units of hbar.
// Field strengths (electric) and Larmor frequencies (magnetic) enter only
// through the dimensionless control parameter lambda.

#include <compare>

namespace rotor_otto {

/// Temperature in units of E / k_B. Always strictly positive.
class ReducedTemperature {
 public:
  explicit ReducedTemperature(double tau);

  double value() const noexcept { return tau_; }

  friend auto operator<=>(const ReducedTemperature&,
                          const ReducedTemperature&) = default;

 private:
  double tau_;
};

/// Dimensionless control parameter. Any finite value; the electric machine
/// additionally rejects negative field strengths at its own entry points.
class ControlParam {
 public:
  explicit ControlParam(double lambda);

  double value() const noexcept { return lambda_; }

  friend auto operator<=>(const ControlParam&, const ControlParam&) = default;

 private:
  double lambda_;
};

/// The four control coordinates of an ideal Otto cycle. tau_h >= tau_c.
struct CyclePoint {
  ControlParam lambda_h;
  ControlParam lambda_c;
  ReducedTemperature tau_h;
  ReducedTemperature tau_c;

  friend bool operator==(const CyclePoint&, const CyclePoint&) = default;
};

/// Throws std::domain_error when a temperature is not strictly positive,
/// a value is not finite, or tau_c > tau_h.
CyclePoint make_cycle_point(double lambda_h, double lambda_c, double tau_h,
                            double tau_c);

/// Equilibrium averages <H(lambda_i)> in the Gibbs state of
/// (lambda_j, tau_j), labelled `ij`, in units of E.
struct MeanEnergyQuartet {
  double hh = 0.0;
  double hc = 0.0;
  double ch = 0.0;
  double cc = 0.0;

  bool finite() const noexcept;

  friend bool operator==(const MeanEnergyQuartet&,
                         const MeanEnergyQuartet&) = default;
};

/// Throws std::domain_error unless lambda >= 0 (electric field strength).
void require_non_negative_field(double lambda, const char* what);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_UNITS_HPP_
