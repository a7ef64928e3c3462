#ifndef ROTOR_OTTO_AXIS_HPP_
#define ROTOR_OTTO_AXIS_HPP_

#include <string_view>
#include <vector>

namespace rotor_otto {

enum class AxisScale { Linear, Log };

/// One sampled parameter axis: `count` points from `min` to `max`
/// inclusive, equally spaced in value (Linear) or in log-value (Log).
struct Axis {
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  AxisScale scale = AxisScale::Linear;

  /// Throws std::domain_error unless count >= 2, min < max and, for a log
  /// axis, min > 0.
  void validate() const;

  /// Sample points. The endpoints are reproduced exactly.
  std::vector<double> values() const;

  friend bool operator==(const Axis&, const Axis&) = default;
};

std::string_view to_string(AxisScale scale);
/// Accepts "linear"/"lin" and "log". Throws std::invalid_argument otherwise.
AxisScale parse_axis_scale(std::string_view text);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_AXIS_HPP_
