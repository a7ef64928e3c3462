// rotor_otto: command-line front end.
//
//   rotor_otto cycle    --machine M --model K --lambda-h .. --lambda-c .. --tau-h .. --tau-c ..
//   rotor_otto sweep    --machine M --model K --lambda-c .. --tau-c .. --out FILE [axes]
//   rotor_otto momentum --tau T [--tau T ...] [lambda axis] [--out FILE]
//   rotor_otto optimum  --lambda-c .. --tau-c .. [axes]
//   rotor_otto selftest [--seed N] [--tol X]
//
// Exit codes: 0 ok, 1 selftest failure, 2 usage or invalid input,
// 3 numerical failure. Data goes to stdout, diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotor_otto/rotor_otto.hpp"
#include "selftest.hpp"

namespace ro = rotor_otto;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// Raised for inputs that parse but are rejected before computing anything.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AxisFlags {
  double min;
  double max;
  int count;
  std::string scale = "linear";

  ro::Axis axis() const {
    return {min, max, count, ro::parse_axis_scale(scale)};
  }
};

void add_axis(CLI::App* cmd, const std::string& name, AxisFlags& flags) {
  cmd->add_option("--" + name + "-min", flags.min, "lower end")
      ->capture_default_str();
  cmd->add_option("--" + name + "-max", flags.max, "upper end")
      ->capture_default_str();
  cmd->add_option("--" + name + "-count", flags.count, "number of points")
      ->capture_default_str();
  cmd->add_option("--" + name + "-scale", flags.scale, "linear or log")
      ->check(CLI::IsMember({"linear", "lin", "log"}, CLI::ignore_case))
      ->capture_default_str();
}

struct Config {
  std::string machine;
  std::string model;
  double lambda_h = 0.0;
  double lambda_c = 0.0;
  double tau_h = 0.0;
  double tau_c = 0.0;

  AxisFlags sweep_lambda{1.0, 20.0, 200};
  AxisFlags sweep_tau{1.0, 10.0, 200};
  AxisFlags scan_lambda{0.15, 0.35, 201};
  AxisFlags scan_tau{0.2, 2.0, 50};
  std::string out;
  std::string format = "csv";
  bool normalize_work = false;
  unsigned threads = 0;

  ro::EvaluationOptions options;

  AxisFlags momentum_lambda{-2.0, 2.0, 401};
  std::vector<double> momentum_taus;

  std::uint64_t seed = 1;
  std::optional<double> selftest_tol;
};

void add_machine_model(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--machine", cfg.machine, "electric or magnetic")
      ->required()
      ->check(CLI::IsMember({"electric", "magnetic"}, CLI::ignore_case));
  cmd->add_option("--model", cfg.model, "classical or quantum")
      ->required()
      ->check(CLI::IsMember({"classical", "quantum"}, CLI::ignore_case));
}

void add_numeric_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--mode-tol", cfg.options.mode_tol,
                  "band around zero for W and Q_c")
      ->capture_default_str();
  cmd->add_option("--electric-tol", cfg.options.electric_tol,
                  "cutoff-doubling target for the quantum pendulum")
      ->capture_default_str();
  cmd->add_option("--max-cutoff", cfg.options.electric_max_cutoff,
                  "largest momentum cutoff M before giving up")
      ->check(CLI::Range(32, ro::kMaximumCutoff))
      ->capture_default_str();
}

void require_electric_fields(ro::Machine machine,
                             std::initializer_list<double> lambdas) {
  if (machine != ro::Machine::Electric) return;
  for (double l : lambdas) {
    if (l < 0.0) throw UsageError("electric field strength must be >= 0");
  }
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_cycle(const Config& cfg) {
  const auto machine = ro::parse_machine(cfg.machine);
  const auto model = ro::parse_model(cfg.model);
  const auto point =
      ro::make_cycle_point(cfg.lambda_h, cfg.lambda_c, cfg.tau_h, cfg.tau_c);
  require_electric_fields(machine, {cfg.lambda_h, cfg.lambda_c});
  print_json(ro::to_json(ro::evaluate_cycle(machine, model, point, cfg.options)));
  return kExitOk;
}

ro::SweepSpec sweep_spec(const Config& cfg) {
  ro::SweepSpec spec;
  spec.lambda_h = cfg.sweep_lambda.axis();
  spec.tau_h = cfg.sweep_tau.axis();
  spec.lambda_c = cfg.lambda_c;
  spec.tau_c = cfg.tau_c;
  spec.machine = ro::parse_machine(cfg.machine);
  spec.model = ro::parse_model(cfg.model);
  spec.options = cfg.options;
  spec.normalize_work = cfg.normalize_work;
  spec.validate();
  return spec;
}

int cmd_sweep(const Config& cfg) {
  const auto spec = sweep_spec(cfg);
  int reported = 0;
  ro::SweepOptions options;
  options.threads = cfg.threads;
  options.progress = [&reported](std::size_t done, std::size_t total) {
    const int decile = static_cast<int>(done * 10 / total);
    for (; reported < decile; ++reported) {
      std::cerr << "sweep: " << (reported + 1) * 10 << "% (" << done << '/'
                << total << " columns)\n";
    }
  };
  const auto grid = ro::run_sweep(spec, options);
  if (cfg.format == "json") {
    ro::write_json(grid, cfg.out);
  } else {
    ro::write_csv(grid, cfg.out);
  }
  return kExitOk;
}

int cmd_momentum(const Config& cfg) {
  const auto axis = cfg.momentum_lambda.axis();
  axis.validate();
  for (double t : cfg.momentum_taus) (void)ro::ReducedTemperature(t);
  const auto rows = ro::momentum_curve(axis, cfg.momentum_taus);
  if (cfg.out.empty()) {
    ro::write_momentum_csv(rows, std::cout);
    return kExitOk;
  }
  std::ofstream out(cfg.out, std::ios::binary | std::ios::trunc);
  if (!out) throw ro::IoError(cfg.out, "cannot open for writing");
  ro::write_momentum_csv(rows, out);
  if (!out.flush()) throw ro::IoError(cfg.out, "write failed");
  return kExitOk;
}

int cmd_optimum(const Config& cfg) {
  const ro::ControlParam lambda_c(cfg.lambda_c);
  const ro::ReducedTemperature tau_c(cfg.tau_c);
  const ro::WorkScanGrid grid{cfg.scan_lambda.axis(), cfg.scan_tau.axis()};
  grid.lambda_h.validate();
  grid.tau_h.validate();
  const auto best = ro::optimal_work_scan(lambda_c, tau_c, grid);
  auto j = ro::to_json(best.point);
  j["w_min"] = best.w_min;
  j["w_over_e16"] = 16.0 * best.w_min;
  print_json(j);
  return kExitOk;
}

int cmd_selftest(const Config& cfg) {
  const auto results = rotor_otto::tools::run_selftest(cfg.seed, cfg.selftest_tol);
  rotor_otto::tools::print_table(results, std::cout);
  for (const auto& r : results) {
    if (!r.passed()) return kExitSelftest;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Otto cycles with a planar rotor working medium"};
  app.require_subcommand(1);
  Config cfg;

  auto* cycle = app.add_subcommand("cycle", "evaluate one cycle, JSON to stdout");
  add_machine_model(cycle, cfg);
  cycle->add_option("--lambda-h", cfg.lambda_h, "hot-stroke field")->required();
  cycle->add_option("--lambda-c", cfg.lambda_c, "cold-stroke field")->required();
  cycle->add_option("--tau-h", cfg.tau_h, "hot temperature")->required();
  cycle->add_option("--tau-c", cfg.tau_c, "cold temperature")->required();
  add_numeric_options(cycle, cfg);

  auto* sweep = app.add_subcommand("sweep", "regime map over (lambda_h, tau_h)");
  add_machine_model(sweep, cfg);
  add_axis(sweep, "lambda-h", cfg.sweep_lambda);
  add_axis(sweep, "tau-h", cfg.sweep_tau);
  sweep->add_option("--lambda-c", cfg.lambda_c, "cold-stroke field")->required();
  sweep->add_option("--tau-c", cfg.tau_c, "cold temperature")->required();
  sweep->add_option("--out", cfg.out, "output file")->required();
  sweep->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_flag("--normalize-work", cfg.normalize_work,
                  "add work in units of E/16");
  sweep->add_option("--threads", cfg.threads, "worker threads, 0 = all cores")
      ->envname("ROTOR_OTTO_THREADS")
      ->capture_default_str();
  add_numeric_options(sweep, cfg);

  auto* momentum = app.add_subcommand(
      "momentum", "magnetic <L_z> and epsilon versus lambda, CSV");
  add_axis(momentum, "lambda", cfg.momentum_lambda);
  momentum->add_option("--tau", cfg.momentum_taus, "temperature, repeatable")
      ->required();
  momentum->add_option("--out", cfg.out, "output file (default stdout)");

  auto* optimum = app.add_subcommand(
      "optimum", "minimum quantum magnetic work over (lambda_h, tau_h)");
  add_axis(optimum, "lambda-h", cfg.scan_lambda);
  add_axis(optimum, "tau-h", cfg.scan_tau);
  optimum->add_option("--lambda-c", cfg.lambda_c, "cold-stroke field")->required();
  optimum->add_option("--tau-c", cfg.tau_c, "cold temperature")->required();

  auto* selftest = app.add_subcommand("selftest", "oracle cross-checks");
  selftest->add_option("--seed", cfg.seed, "random point selection")
      ->capture_default_str();
  selftest->add_option("--tol", cfg.selftest_tol,
                       "override every check tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    try {
      if (*cycle) return cmd_cycle(cfg);
      if (*sweep) return cmd_sweep(cfg);
      if (*momentum) return cmd_momentum(cfg);
      if (*optimum) return cmd_optimum(cfg);
      return cmd_selftest(cfg);
    } catch (const ro::SweepCellError&) {
      throw;
    } catch (const ro::ConvergenceError&) {
      throw;
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } catch (const UsageError& e) {
    std::cerr << "rotor_otto: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ro::IoError& e) {
    std::cerr << "rotor_otto: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "rotor_otto: " << e.what() << '\n';
    return kExitNumeric;
  }
}
