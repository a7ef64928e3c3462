#include "rotor_otto/classical.hpp"

#include "rotor_otto/specfun.hpp"

namespace rotor_otto {

BesselArgument::BesselArgument(ControlParam lambda, ReducedTemperature tau)
    : x(lambda.value() / (2.0 * tau.value())) {
  require_non_negative_field(lambda.value(), "BesselArgument");
}

double classical_mean_energy_electric(ControlParam lambda_i,
                                      ControlParam lambda_j,
                                      ReducedTemperature tau_j) {
  require_non_negative_field(lambda_i.value(), "classical_mean_energy_electric");
  const BesselArgument arg(lambda_j, tau_j);
  return 0.5 * tau_j.value() +
         0.5 * lambda_i.value() * (1.0 - bessel_ratio_i1_i0(arg.x));
}

double classical_mean_energy_magnetic(ControlParam lambda_i,
                                      ControlParam lambda_j,
                                      ReducedTemperature tau_j) {
  const double lj = lambda_j.value();
  return 0.5 * tau_j.value() + 0.5 * lj * (lj - 2.0 * lambda_i.value());
}

MeanEnergyQuartet classical_cycle_electric(const CyclePoint& p) {
  return {
      .hh = classical_mean_energy_electric(p.lambda_h, p.lambda_h, p.tau_h),
      .hc = classical_mean_energy_electric(p.lambda_h, p.lambda_c, p.tau_c),
      .ch = classical_mean_energy_electric(p.lambda_c, p.lambda_h, p.tau_h),
      .cc = classical_mean_energy_electric(p.lambda_c, p.lambda_c, p.tau_c),
  };
}

MeanEnergyQuartet classical_cycle_magnetic(const CyclePoint& p) {
  return {
      .hh = classical_mean_energy_magnetic(p.lambda_h, p.lambda_h, p.tau_h),
      .hc = classical_mean_energy_magnetic(p.lambda_h, p.lambda_c, p.tau_c),
      .ch = classical_mean_energy_magnetic(p.lambda_c, p.lambda_h, p.tau_h),
      .cc = classical_mean_energy_magnetic(p.lambda_c, p.lambda_c, p.tau_c),
  };
}

bool classical_engine_condition_electric(const CyclePoint& p) {
  const double lh = p.lambda_h.value();
  const double lc = p.lambda_c.value();
  require_non_negative_field(lh, "classical_engine_condition_electric");
  require_non_negative_field(lc, "classical_engine_condition_electric");
  // Cross-multiplied so that lambda_c = 0 needs no special case.
  return lh > lc && p.tau_h.value() * lc > lh * p.tau_c.value();
}

bool classical_fridge_condition_electric(const CyclePoint& p) {
  const double lc = p.lambda_c.value();
  const double rh = bessel_ratio_i1_i0(BesselArgument(p.lambda_h, p.tau_h).x);
  const double rc = bessel_ratio_i1_i0(BesselArgument(p.lambda_c, p.tau_c).x);
  return lc * (rh - rc) > p.tau_h.value() - p.tau_c.value();
}

}  // namespace rotor_otto
