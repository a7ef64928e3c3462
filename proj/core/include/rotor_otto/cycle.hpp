#ifndef ROTOR_OTTO_CYCLE_HPP_
#define ROTOR_OTTO_CYCLE_HPP_

// Heats, work and operation mode of the ideal four-stroke Otto cycle.
//
// Every machine/model combination reduces to a MeanEnergyQuartet; the
// quartet is turned into a CycleReport here and nowhere else:
//
//   Q_c = <H_c>_c - <H_c>_h,   Q_h = <H_h>_h - <H_h>_c,   W = -(Q_c + Q_h).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotor_otto/qelectric.hpp"
#include "rotor_otto/units.hpp"

namespace rotor_otto {

enum class Mode { Engine, Refrigerator, Heater };
enum class Machine { Electric, Magnetic };
enum class Model { Classical, Quantum };

std::string_view to_string(Mode mode);
std::string_view to_string(Machine machine);
std::string_view to_string(Model model);

// Case-insensitive. Throw std::invalid_argument on unknown names.
Mode parse_mode(std::string_view text);
Machine parse_machine(std::string_view text);
Model parse_model(std::string_view text);

/// Band around zero inside which W and Q_c count as vanishing.
inline constexpr double kDefaultModeTolerance = 1e-12;

/// Cutoff-doubling target for the quantum electric quartet.
inline constexpr double kDefaultElectricTolerance = 1e-10;

struct CycleReport {
  double q_c = 0.0;
  double q_h = 0.0;
  double w = 0.0;
  Mode mode = Mode::Heater;
  std::optional<double> efficiency = std::nullopt;  // |W| / Q_h, engines only
  std::optional<double> cop = std::nullopt;         // Q_c / W, refrigerators only
  Machine machine = Machine::Electric;
  Model model = Model::Classical;
  CyclePoint point;

  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

/// Engine iff W < -tol; Refrigerator iff Q_c > tol and W >= -tol; otherwise
/// Heater. Throws std::domain_error on a non-finite quartet.
CycleReport assemble_cycle(const MeanEnergyQuartet& quartet,
                           const CyclePoint& point, Machine machine,
                           Model model, double tol = kDefaultModeTolerance);

/// 1 - tau_c / tau_h.
double carnot_bound(const CyclePoint& point);

struct EvaluationOptions {
  double mode_tol = kDefaultModeTolerance;
  double electric_tol = kDefaultElectricTolerance;
  int electric_max_cutoff = kMaximumCutoff;
};

/// Quartet for any machine/model combination.
MeanEnergyQuartet compute_quartet(Machine machine, Model model,
                                  const CyclePoint& point,
                                  const EvaluationOptions& options = {});

CycleReport evaluate_cycle(Machine machine, Model model,
                           const CyclePoint& point,
                           const EvaluationOptions& options = {});

/// Consistency violations of a report: first law beyond 1e-10, engine and
/// refrigerator conditions holding together, efficiency outside
/// (0, Carnot + 1e-9]. Empty when the report is consistent.
std::vector<std::string> report_violations(const CycleReport& report,
                                           double tol = kDefaultModeTolerance);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_CYCLE_HPP_
