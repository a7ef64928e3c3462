#include "rotor_otto/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "rotor_otto/qelectric.hpp"
#include "rotor_otto/qmagnetic.hpp"

namespace rotor_otto {

void SweepSpec::validate() const {
  lambda_h.validate();
  tau_h.validate();
  const ReducedTemperature cold(tau_c);
  const ControlParam cold_lambda(lambda_c);
  if (tau_h.min < cold.value()) {
    std::ostringstream msg;
    msg << "hot temperature axis starts at " << tau_h.min
        << ", below the cold temperature " << tau_c;
    throw std::domain_error(msg.str());
  }
  if (machine == Machine::Electric) {
    require_non_negative_field(lambda_h.min, "sweep lambda_h axis");
    require_non_negative_field(lambda_c, "sweep lambda_c");
  }
  if (!(options.electric_tol > 0.0) || !(options.mode_tol >= 0.0)) {
    throw std::domain_error("sweep tolerances must be positive");
  }
  if (options.electric_max_cutoff < kInitialCutoff) {
    throw std::domain_error("sweep electric_max_cutoff must be >= 32");
  }
}

bool operator==(const SweepSpec& a, const SweepSpec& b) {
  return a.lambda_h == b.lambda_h && a.tau_h == b.tau_h &&
         a.lambda_c == b.lambda_c && a.tau_c == b.tau_c &&
         a.machine == b.machine && a.model == b.model &&
         a.options.mode_tol == b.options.mode_tol &&
         a.options.electric_tol == b.options.electric_tol &&
         a.options.electric_max_cutoff == b.options.electric_max_cutoff &&
         a.normalize_work == b.normalize_work;
}

SweepCellError::SweepCellError(double lh, double th, const std::string& cause)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg.precision(17);
        msg << "cell (lambda_h=" << lh << ", tau_h=" << th
            << ") failed: " << cause;
        return msg.str();
      }()),
      lambda_h(lh),
      tau_h(th) {}

namespace {

void evaluate_column(const SweepSpec& spec, double lh,
                     std::span<const double> taus,
                     std::span<std::optional<CycleReport>> column_cells,
                     std::size_t stride) {
  const bool pendulum =
      spec.machine == Machine::Electric && spec.model == Model::Quantum;
  std::optional<PendulumSpectra> hot;
  std::optional<PendulumSpectra> cold;
  if (pendulum) {
    hot.emplace(ControlParam(lh));
    cold.emplace(ControlParam(spec.lambda_c));
  }
  for (std::size_t it = 0; it < taus.size(); ++it) {
    const double th = taus[it];
    try {
      const auto point = make_cycle_point(lh, spec.lambda_c, th, spec.tau_c);
      if (pendulum) {
        const auto quartet = thermal_quartet_electric(
            point, spec.options.electric_tol, *hot, *cold,
            spec.options.electric_max_cutoff);
        column_cells[it * stride] =
            assemble_cycle(quartet, point, spec.machine, spec.model,
                           spec.options.mode_tol);
      } else {
        column_cells[it * stride] =
            evaluate_cycle(spec.machine, spec.model, point, spec.options);
      }
    } catch (const std::exception& e) {
      throw SweepCellError(lh, th, e.what());
    }
  }
}

}  // namespace

SweepGrid run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  spec.validate();
  SweepGrid grid;
  grid.spec = spec;
  grid.lambda_values = spec.lambda_h.values();
  grid.tau_values = spec.tau_h.values();
  const std::size_t nl = grid.lambda_values.size();
  const std::size_t nt = grid.tau_values.size();

  std::vector<std::optional<CycleReport>> cells(nl * nt);
  std::vector<std::exception_ptr> errors(nl);
  std::atomic<std::size_t> next{0};
  std::size_t finished = 0;
  std::mutex progress_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t col = next.fetch_add(1);
      if (col >= nl) return;
      try {
        // Column col starts at cells[col] and advances by nl per tau row.
        evaluate_column(spec, grid.lambda_values[col], grid.tau_values,
                        std::span(cells).subspan(col), nl);
      } catch (...) {
        errors[col] = std::current_exception();
      }
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(++finished, nl);
      }
    }
  };

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, nl));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  grid.cells.reserve(cells.size());
  for (auto& cell : cells) grid.cells.push_back(std::move(*cell));

  auto boundaries = extract_boundaries(grid);
  grid.boundary_engine = std::move(boundaries.engine);
  grid.boundary_fridge = std::move(boundaries.fridge);
  return grid;
}

std::vector<MomentumRow> momentum_curve(const Axis& lambda,
                                        std::span<const double> taus) {
  const auto lambdas = lambda.values();
  std::vector<MomentumRow> rows;
  rows.reserve(lambdas.size() * taus.size());
  for (double t : taus) {
    const ReducedTemperature tau(t);
    for (double l : lambdas) {
      const auto stats = momentum_stats(ControlParam(l), tau);
      rows.push_back({l, t, stats.mean_lz, stats.epsilon});
    }
  }
  return rows;
}

Boundaries extract_boundaries(const SweepGrid& grid) {
  std::vector<double> w(grid.cells.size());
  std::vector<double> minus_qc(grid.cells.size());
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    w[i] = grid.cells[i].w;
    minus_qc[i] = -grid.cells[i].q_c;
  }
  return {contour_zero(w, grid.lambda_values, grid.tau_values),
          contour_zero(minus_qc, grid.lambda_values, grid.tau_values)};
}

}  // namespace rotor_otto
