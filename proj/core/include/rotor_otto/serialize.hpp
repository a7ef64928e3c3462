#ifndef ROTOR_OTTO_SERIALIZE_HPP_
#define ROTOR_OTTO_SERIALIZE_HPP_

// CSV and JSON encodings of cycle reports and sweep grids.
//
// CSV columns, in order:
//   lambda_h,tau_h,lambda_c,tau_c,machine,model,q_c,q_h,w,mode,efficiency,cop
// plus a trailing w_over_e16 column when SweepSpec::normalize_work is set.
// Absent optionals are empty fields. Numbers use the shortest decimal form
// that round-trips to the same double.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rotor_otto/cycle.hpp"
#include "rotor_otto/sweep.hpp"

namespace rotor_otto {

/// An I/O failure, with the offending path in the message.
class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what);

  std::filesystem::path path;
};

/// Shortest round-trip decimal representation.
std::string format_number(double value);

nlohmann::json to_json(const CyclePoint& point);
CyclePoint cycle_point_from_json(const nlohmann::json& j);

/// Keys: q_c, q_h, w, mode, efficiency, cop, machine, model, lambda_h,
/// lambda_c, tau_h, tau_c. Absent optionals are null.
nlohmann::json to_json(const CycleReport& report);
CycleReport cycle_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SweepGrid& grid);
SweepGrid sweep_grid_from_json(const nlohmann::json& j);

void write_csv(const SweepGrid& grid, std::ostream& out);
void write_json(const SweepGrid& grid, std::ostream& out);

/// Write to a temporary sibling and rename into place, so a failed write
/// never leaves a partial file at `path`. Throw IoError.
void write_csv(const SweepGrid& grid, const std::filesystem::path& path);
void write_json(const SweepGrid& grid, const std::filesystem::path& path);

SweepGrid read_json(const std::filesystem::path& path);

/// Columns lambda,tau,mean_lz,epsilon.
void write_momentum_csv(std::span<const MomentumRow> rows, std::ostream& out);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_SERIALIZE_HPP_
