#include "rotor_otto/axis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rotor_otto {

void Axis::validate() const {
  std::ostringstream msg;
  if (count < 2) {
    msg << "axis needs at least 2 points, got " << count;
  } else if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    msg << "axis range must satisfy min < max, got [" << min << ", " << max
        << "]";
  } else if (scale == AxisScale::Log && !(min > 0.0)) {
    msg << "log axis requires min > 0, got " << min;
  } else {
    return;
  }
  throw std::domain_error(msg.str());
}

std::vector<double> Axis::values() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(count));
  const double last = count - 1;
  if (scale == AxisScale::Linear) {
    for (int i = 0; i < count; ++i) {
      out[i] = min + (max - min) * (i / last);
    }
  } else {
    const double lo = std::log(min);
    const double hi = std::log(max);
    for (int i = 0; i < count; ++i) {
      out[i] = std::exp(lo + (hi - lo) * (i / last));
    }
  }
  out.front() = min;
  out.back() = max;
  return out;
}

std::string_view to_string(AxisScale scale) {
  return scale == AxisScale::Linear ? "linear" : "log";
}

AxisScale parse_axis_scale(std::string_view text) {
  if (text == "linear" || text == "lin") return AxisScale::Linear;
  if (text == "log") return AxisScale::Log;
  throw std::invalid_argument("unknown axis scale '" + std::string(text) +
                              "' (expected linear or log)");
}

}  // namespace rotor_otto
