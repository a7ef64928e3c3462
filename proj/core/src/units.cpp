#include "rotor_otto/units.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rotor_otto {

ReducedTemperature::ReducedTemperature(double tau) : tau_(tau) {
  if (!std::isfinite(tau) || tau <= 0.0) {
    std::ostringstream msg;
    msg << "reduced temperature must be finite and > 0, got " << tau;
    throw std::domain_error(msg.str());
  }
}

ControlParam::ControlParam(double lambda) : lambda_(lambda) {
  if (!std::isfinite(lambda)) {
    throw std::domain_error("control parameter must be finite");
  }
}

CyclePoint make_cycle_point(double lambda_h, double lambda_c, double tau_h,
                            double tau_c) {
  CyclePoint point{ControlParam(lambda_h), ControlParam(lambda_c),
                   ReducedTemperature(tau_h), ReducedTemperature(tau_c)};
  if (tau_c > tau_h) {
    std::ostringstream msg;
    msg << "cold temperature " << tau_c << " exceeds hot temperature "
        << tau_h;
    throw std::domain_error(msg.str());
  }
  return point;
}

bool MeanEnergyQuartet::finite() const noexcept {
  return std::isfinite(hh) && std::isfinite(hc) && std::isfinite(ch) &&
         std::isfinite(cc);
}

void require_non_negative_field(double lambda, const char* what) {
  if (!(lambda >= 0.0)) {
    throw std::domain_error(std::string(what) +
                            ": electric field strength must be >= 0, got " +
                            std::to_string(lambda));
  }
}

}  // namespace rotor_otto
