#include "rotor_otto/cycle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rotor_otto/classical.hpp"
#include "rotor_otto/qelectric.hpp"
#include "rotor_otto/qmagnetic.hpp"

namespace rotor_otto {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

[[noreturn]] void unknown(std::string_view kind, std::string_view text) {
  throw std::invalid_argument("unknown " + std::string(kind) + " '" +
                              std::string(text) + "'");
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Engine: return "Engine";
    case Mode::Refrigerator: return "Refrigerator";
    case Mode::Heater: return "Heater";
  }
  return "Heater";
}

std::string_view to_string(Machine machine) {
  return machine == Machine::Electric ? "Electric" : "Magnetic";
}

std::string_view to_string(Model model) {
  return model == Model::Classical ? "Classical" : "Quantum";
}

Mode parse_mode(std::string_view text) {
  const auto s = lower(text);
  if (s == "engine") return Mode::Engine;
  if (s == "refrigerator") return Mode::Refrigerator;
  if (s == "heater") return Mode::Heater;
  unknown("mode", text);
}

Machine parse_machine(std::string_view text) {
  const auto s = lower(text);
  if (s == "electric") return Machine::Electric;
  if (s == "magnetic") return Machine::Magnetic;
  unknown("machine", text);
}

Model parse_model(std::string_view text) {
  const auto s = lower(text);
  if (s == "classical") return Model::Classical;
  if (s == "quantum") return Model::Quantum;
  unknown("model", text);
}

CycleReport assemble_cycle(const MeanEnergyQuartet& quartet,
                           const CyclePoint& point, Machine machine,
                           Model model, double tol) {
  if (!quartet.finite()) {
    throw std::domain_error("assemble_cycle: non-finite mean energy");
  }
  CycleReport report{.point = point};
  report.machine = machine;
  report.model = model;
  report.q_c = quartet.cc - quartet.ch;
  report.q_h = quartet.hh - quartet.hc;
  report.w = -(report.q_c + report.q_h);

  if (report.w < -tol) {
    report.mode = Mode::Engine;
    report.efficiency = std::abs(report.w) / report.q_h;
  } else if (report.q_c > tol) {
    report.mode = Mode::Refrigerator;
    report.cop = report.q_c / report.w;
  } else {
    report.mode = Mode::Heater;
  }
  return report;
}

double carnot_bound(const CyclePoint& point) {
  return 1.0 - point.tau_c.value() / point.tau_h.value();
}

MeanEnergyQuartet compute_quartet(Machine machine, Model model,
                                  const CyclePoint& point,
                                  const EvaluationOptions& options) {
  if (machine == Machine::Electric) {
    return model == Model::Classical
               ? classical_cycle_electric(point)
               : thermal_quartet_electric(point, options.electric_tol,
                                          options.electric_max_cutoff);
  }
  return model == Model::Classical ? classical_cycle_magnetic(point)
                                   : quantum_quartet_magnetic(point);
}

CycleReport evaluate_cycle(Machine machine, Model model,
                           const CyclePoint& point,
                           const EvaluationOptions& options) {
  return assemble_cycle(compute_quartet(machine, model, point, options), point,
                        machine, model, options.mode_tol);
}

std::vector<std::string> report_violations(const CycleReport& r, double tol) {
  std::vector<std::string> issues;
  auto add = [&](const std::string& what) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " at (lambda_h=" << r.point.lambda_h.value()
        << ", lambda_c=" << r.point.lambda_c.value()
        << ", tau_h=" << r.point.tau_h.value()
        << ", tau_c=" << r.point.tau_c.value() << ")";
    issues.push_back(msg.str());
  };
  if (std::abs(r.q_c + r.q_h + r.w) > 1e-10) add("first law violated");
  if (r.w < -tol && r.q_c > tol) add("engine and refrigerator at once");
  if (r.efficiency.has_value() != (r.mode == Mode::Engine)) {
    add("efficiency present outside engine mode");
  }
  if (r.efficiency) {
    const double eta = *r.efficiency;
    if (!(eta > 0.0) || eta > carnot_bound(r.point) + 1e-9) {
      add("efficiency outside (0, Carnot]");
    }
  }
  if (r.cop.has_value() != (r.mode == Mode::Refrigerator)) {
    add("cop present outside refrigerator mode");
  }
  return issues;
}

}  // namespace rotor_otto
