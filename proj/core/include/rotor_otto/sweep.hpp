#ifndef ROTOR_OTTO_SWEEP_HPP_
#define ROTOR_OTTO_SWEEP_HPP_

// Regime maps over the hot-stroke parameters (lambda_h, tau_h) at fixed
// cold-stroke parameters, momentum curves, and zero-level boundary
// extraction.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rotor_otto/axis.hpp"
#include "rotor_otto/cycle.hpp"
#include "rotor_otto/units.hpp"

namespace rotor_otto {

struct SweepSpec {
  Axis lambda_h{1.0, 20.0, 200, AxisScale::Linear};
  Axis tau_h{1.0, 10.0, 200, AxisScale::Linear};
  double lambda_c = 1.0;
  double tau_c = 1.0;
  Machine machine = Machine::Electric;
  Model model = Model::Classical;
  EvaluationOptions options;
  /// Adds a `w_over_e16` column / field (work in units of E/16).
  bool normalize_work = false;

  /// Axis checks, tau_c > 0, tau_h.min >= tau_c, and non-negative field
  /// strengths for the electric machine. Throws std::domain_error.
  void validate() const;

  friend bool operator==(const SweepSpec& a, const SweepSpec& b);
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};
using Polyline = std::vector<Point2>;

struct SweepGrid {
  SweepSpec spec;
  std::vector<double> lambda_values;
  std::vector<double> tau_values;
  /// Row-major with tau as the row index: cells[i_tau * n_lambda + i_lambda].
  std::vector<CycleReport> cells;
  std::vector<Polyline> boundary_engine;  // W = 0
  std::vector<Polyline> boundary_fridge;  // Q_c = 0

  const CycleReport& at(std::size_t i_lambda, std::size_t i_tau) const {
    return cells[i_tau * lambda_values.size() + i_lambda];
  }
};

/// A cell evaluation failed; carries the offending grid coordinates.
class SweepCellError : public std::runtime_error {
 public:
  SweepCellError(double lambda_h, double tau_h, const std::string& cause);

  double lambda_h;
  double tau_h;
};

struct SweepOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Called from worker threads after each finished lambda column.
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Evaluates every cell. Columns of constant lambda_h are distributed over
/// worker threads; each cell is computed by the same sequence of operations
/// regardless of the thread count, so results are bitwise reproducible.
SweepGrid run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

struct MomentumRow {
  double lambda = 0.0;
  double tau = 0.0;
  double mean_lz = 0.0;
  double epsilon = 0.0;
};

/// One row per (tau, lambda), tau outer.
std::vector<MomentumRow> momentum_curve(const Axis& lambda,
                                        std::span<const double> taus);

/// Zero-level polylines of a scalar field sampled on a rectilinear grid
/// (field[iy * xs.size() + ix]) by marching squares. A sample is "inside"
/// when it is negative; crossings are linearly interpolated on cell edges
/// whose endpoints differ in that respect.
std::vector<Polyline> contour_zero(std::span<const double> field,
                                   std::span<const double> xs,
                                   std::span<const double> ys);

struct Boundaries {
  std::vector<Polyline> engine;  // zero level of W
  std::vector<Polyline> fridge;  // zero level of Q_c
};

Boundaries extract_boundaries(const SweepGrid& grid);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_SWEEP_HPP_
