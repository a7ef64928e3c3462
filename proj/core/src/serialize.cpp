#include "rotor_otto/serialize.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <system_error>

namespace rotor_otto {

IoError::IoError(const std::filesystem::path& p, const std::string& what)
    : std::runtime_error(p.string() + ": " + what), path(p) {}

std::string format_number(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json axis_to_json(const Axis& axis) {
  return {{"min", axis.min},
          {"max", axis.max},
          {"count", axis.count},
          {"scale", std::string(to_string(axis.scale))}};
}

Axis axis_from_json(const json& j) {
  Axis axis;
  axis.min = j.at("min").get<double>();
  axis.max = j.at("max").get<double>();
  axis.count = j.at("count").get<int>();
  axis.scale = parse_axis_scale(j.at("scale").get<std::string>());
  return axis;
}

json polylines_to_json(const std::vector<Polyline>& lines) {
  json out = json::array();
  for (const auto& line : lines) {
    json pts = json::array();
    for (const auto& p : line) pts.push_back({p.x, p.y});
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<Polyline> polylines_from_json(const json& j) {
  std::vector<Polyline> out;
  for (const auto& line : j) {
    Polyline pts;
    for (const auto& p : line) {
      pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    out.push_back(std::move(pts));
  }
  return out;
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

template <typename Writer>
void write_atomically(const std::filesystem::path& path, Writer&& writer) {
  auto tmp = path;
  tmp += ".partial";
  try {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    writer(out);
    out.flush();
    if (!out) throw IoError(path, "write failed");
    out.close();
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError(path, "rename failed: " + ec.message());
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

}  // namespace

json to_json(const CyclePoint& p) {
  return {{"lambda_h", p.lambda_h.value()},
          {"lambda_c", p.lambda_c.value()},
          {"tau_h", p.tau_h.value()},
          {"tau_c", p.tau_c.value()}};
}

CyclePoint cycle_point_from_json(const json& j) {
  return make_cycle_point(j.at("lambda_h").get<double>(),
                          j.at("lambda_c").get<double>(),
                          j.at("tau_h").get<double>(),
                          j.at("tau_c").get<double>());
}

json to_json(const CycleReport& r) {
  json j = {
      {"q_c", r.q_c},
      {"q_h", r.q_h},
      {"w", r.w},
      {"mode", std::string(to_string(r.mode))},
      {"efficiency", optional_number(r.efficiency)},
      {"cop", optional_number(r.cop)},
      {"machine", std::string(to_string(r.machine))},
      {"model", std::string(to_string(r.model))},
  };
  j.update(to_json(r.point));
  return j;
}

CycleReport cycle_report_from_json(const json& j) {
  CycleReport r{.point = cycle_point_from_json(j)};
  r.q_c = j.at("q_c").get<double>();
  r.q_h = j.at("q_h").get<double>();
  r.w = j.at("w").get<double>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.efficiency = optional_from(j.at("efficiency"));
  r.cop = optional_from(j.at("cop"));
  r.machine = parse_machine(j.at("machine").get<std::string>());
  r.model = parse_model(j.at("model").get<std::string>());
  return r;
}

json to_json(const SweepSpec& s) {
  return {{"lambda_h", axis_to_json(s.lambda_h)},
          {"tau_h", axis_to_json(s.tau_h)},
          {"lambda_c", s.lambda_c},
          {"tau_c", s.tau_c},
          {"machine", std::string(to_string(s.machine))},
          {"model", std::string(to_string(s.model))},
          {"mode_tol", s.options.mode_tol},
          {"electric_tol", s.options.electric_tol},
          {"electric_max_cutoff", s.options.electric_max_cutoff},
          {"normalize_work", s.normalize_work}};
}

SweepSpec sweep_spec_from_json(const json& j) {
  SweepSpec s;
  s.lambda_h = axis_from_json(j.at("lambda_h"));
  s.tau_h = axis_from_json(j.at("tau_h"));
  s.lambda_c = j.at("lambda_c").get<double>();
  s.tau_c = j.at("tau_c").get<double>();
  s.machine = parse_machine(j.at("machine").get<std::string>());
  s.model = parse_model(j.at("model").get<std::string>());
  s.options.mode_tol = j.at("mode_tol").get<double>();
  s.options.electric_tol = j.at("electric_tol").get<double>();
  s.options.electric_max_cutoff = j.at("electric_max_cutoff").get<int>();
  s.normalize_work = j.at("normalize_work").get<bool>();
  return s;
}

json to_json(const SweepGrid& grid) {
  json cells = json::array();
  for (const auto& cell : grid.cells) {
    json c = to_json(cell);
    if (grid.spec.normalize_work) c["w_over_e16"] = 16.0 * cell.w;
    cells.push_back(std::move(c));
  }
  return {
      {"format", "rotor_otto.sweep/1"},
      {"extensions",
       {{"cop", "refrigerator coefficient of performance Q_c / W; an "
                "addition to the engine efficiency, not part of the base "
                "cycle definition"}}},
      {"spec", to_json(grid.spec)},
      {"lambda_values", grid.lambda_values},
      {"tau_values", grid.tau_values},
      {"cells", std::move(cells)},
      {"boundaries",
       {{"engine", polylines_to_json(grid.boundary_engine)},
        {"fridge", polylines_to_json(grid.boundary_fridge)}}},
  };
}

SweepGrid sweep_grid_from_json(const json& j) {
  SweepGrid grid;
  grid.spec = sweep_spec_from_json(j.at("spec"));
  grid.lambda_values = j.at("lambda_values").get<std::vector<double>>();
  grid.tau_values = j.at("tau_values").get<std::vector<double>>();
  for (const auto& c : j.at("cells")) {
    grid.cells.push_back(cycle_report_from_json(c));
  }
  if (grid.cells.size() != grid.lambda_values.size() * grid.tau_values.size()) {
    throw std::invalid_argument("sweep JSON: cell count does not match axes");
  }
  grid.boundary_engine = polylines_from_json(j.at("boundaries").at("engine"));
  grid.boundary_fridge = polylines_from_json(j.at("boundaries").at("fridge"));
  return grid;
}

void write_csv(const SweepGrid& grid, std::ostream& out) {
  out << "lambda_h,tau_h,lambda_c,tau_c,machine,model,q_c,q_h,w,mode,"
         "efficiency,cop";
  if (grid.spec.normalize_work) out << ",w_over_e16";
  out << '\n';
  for (const auto& c : grid.cells) {
    out << format_number(c.point.lambda_h.value()) << ','
        << format_number(c.point.tau_h.value()) << ','
        << format_number(c.point.lambda_c.value()) << ','
        << format_number(c.point.tau_c.value()) << ',' << to_string(c.machine)
        << ',' << to_string(c.model) << ',' << format_number(c.q_c) << ','
        << format_number(c.q_h) << ',' << format_number(c.w) << ','
        << to_string(c.mode) << ',' << optional_field(c.efficiency) << ','
        << optional_field(c.cop);
    if (grid.spec.normalize_work) out << ',' << format_number(16.0 * c.w);
    out << '\n';
  }
}

void write_json(const SweepGrid& grid, std::ostream& out) {
  out << to_json(grid).dump(1) << '\n';
}

void write_csv(const SweepGrid& grid, const std::filesystem::path& path) {
  write_atomically(path, [&](std::ostream& out) { write_csv(grid, out); });
}

void write_json(const SweepGrid& grid, const std::filesystem::path& path) {
  write_atomically(path, [&](std::ostream& out) { write_json(grid, out); });
}

SweepGrid read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  try {
    return sweep_grid_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw IoError(path, e.what());
  }
}

void write_momentum_csv(std::span<const MomentumRow> rows, std::ostream& out) {
  out << "lambda,tau,mean_lz,epsilon\n";
  for (const auto& r : rows) {
    out << format_number(r.lambda) << ',' << format_number(r.tau) << ','
        << format_number(r.mean_lz) << ',' << format_number(r.epsilon) << '\n';
  }
}

}  // namespace rotor_otto
