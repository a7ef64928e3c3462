#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "rotor_otto/classical.hpp"
#include "rotor_otto/serialize.hpp"
#include "rotor_otto/sweep.hpp"

using namespace rotor_otto;
namespace fs = std::filesystem;

namespace {

SweepSpec small_electric() {
  SweepSpec spec;
  spec.lambda_h = {1.0, 20.0, 24, AxisScale::Linear};
  spec.tau_h = {1.0, 10.0, 18, AxisScale::Linear};
  return spec;
}

std::string csv(const SweepGrid& grid) {
  std::ostringstream out;
  write_csv(grid, out);
  return out.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "rotor_otto_tests";
  fs::create_directories(dir);
  return dir / name;
}

// Largest distance from y = slope * x over points with x > x_min.
double max_distance_to_line(const std::vector<Polyline>& lines, double slope,
                            double x_min) {
  double worst = 0.0;
  for (const auto& line : lines) {
    for (const auto& p : line) {
      if (p.x <= x_min) continue;
      worst = std::max(worst, std::abs(p.y - slope * p.x) /
                                  std::sqrt(1.0 + slope * slope));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("axis values") {
  SUBCASE("linear endpoints are exact") {
    const Axis a{0.01, 2.0, 200, AxisScale::Linear};
    const auto v = a.values();
    CHECK(v.size() == 200);
    CHECK(v.front() == 0.01);
    CHECK(v.back() == 2.0);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
  }
  SUBCASE("log spacing is geometric") {
    const auto v = Axis{0.01, 100.0, 5, AxisScale::Log}.values();
    CHECK(v[0] == 0.01);
    CHECK(v[1] == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(v[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v[4] == 100.0);
  }
  SUBCASE("invalid axes") {
    CHECK_THROWS_AS((Axis{0.0, 1.0, 1, AxisScale::Linear}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((Axis{0.0, 1.0, 0, AxisScale::Linear}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((Axis{1.0, 1.0, 5, AxisScale::Linear}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((Axis{0.0, 1.0, 5, AxisScale::Log}.validate()),
                    std::domain_error);
  }
  SUBCASE("scale names") {
    CHECK(parse_axis_scale("log") == AxisScale::Log);
    CHECK(parse_axis_scale("linear") == AxisScale::Linear);
    CHECK(parse_axis_scale(to_string(AxisScale::Log)) == AxisScale::Log);
    CHECK_THROWS_AS(parse_axis_scale("cubic"), std::invalid_argument);
  }
}

TEST_CASE("sweep spec validation") {
  auto spec = small_electric();
  CHECK_NOTHROW(spec.validate());
  spec.tau_c = 2.0;
  CHECK_THROWS_AS(spec.validate(), std::domain_error);
  spec = small_electric();
  spec.lambda_h.min = -1.0;
  CHECK_THROWS_AS(spec.validate(), std::domain_error);
  spec.machine = Machine::Magnetic;
  CHECK_NOTHROW(spec.validate());
  spec.tau_h.count = 0;
  CHECK_THROWS_AS(run_sweep(spec), std::domain_error);
}

TEST_CASE("classical electric sweep") {
  const auto grid = run_sweep(small_electric());
  REQUIRE(grid.cells.size() == 24 * 18);
  for (std::size_t it = 0; it < grid.tau_values.size(); ++it) {
    for (std::size_t il = 0; il < grid.lambda_values.size(); ++il) {
      const auto& c = grid.at(il, it);
      CHECK(c.point.lambda_h.value() == grid.lambda_values[il]);
      CHECK(c.point.tau_h.value() == grid.tau_values[it]);
      CHECK(c.point.lambda_c.value() == 1.0);
      CHECK(c.point.tau_c.value() == 1.0);
      if (std::abs(c.w) > 1e-9) {
        CHECK((c.w < 0.0) ==
              classical_engine_condition_electric(c.point));
      }
    }
  }
  // With lambda_c = tau_c = 1 the engine region is bounded by the diagonal
  // and by the lambda_h = 1 edge, where W vanishes identically.
  REQUIRE_FALSE(grid.boundary_engine.empty());
  const double cell = std::max(19.0 / 23, 9.0 / 17);
  CHECK(max_distance_to_line(grid.boundary_engine, 1.0, 1.0) < cell);
  bool on_edge = false;
  for (const auto& line : grid.boundary_engine) {
    for (const auto& p : line) on_edge = on_edge || p.x == 1.0;
  }
  CHECK(on_edge);
}

TEST_CASE("sweeps are deterministic and thread-count independent") {
  auto spec = small_electric();
  spec.model = Model::Quantum;
  spec.lambda_h.count = 9;
  spec.tau_h.count = 7;
  const auto serial = run_sweep(spec, {.threads = 1});
  const auto parallel = run_sweep(spec, {.threads = 4});
  CHECK(csv(serial) == csv(parallel));
  CHECK(csv(serial) == csv(run_sweep(spec, {.threads = 1})));
}

TEST_CASE("progress reports every column") {
  std::vector<std::size_t> seen;
  SweepOptions options;
  options.progress = [&](std::size_t done, std::size_t total) {
    CHECK(total == 24);
    seen.push_back(done);
  };
  run_sweep(small_electric(), options);
  REQUIRE(seen.size() == 24);
  CHECK(seen.back() == 24);
}

TEST_CASE("classical magnetic sweep is all heater") {
  SweepSpec spec;
  spec.machine = Machine::Magnetic;
  spec.lambda_h = {-3.0, 3.0, 30, AxisScale::Linear};
  spec.tau_h = {0.5, 10.0, 30, AxisScale::Log};
  spec.lambda_c = 0.485;
  spec.tau_c = 0.5;
  const auto grid = run_sweep(spec);
  for (const auto& c : grid.cells) CHECK(c.mode == Mode::Heater);
  CHECK(grid.boundary_engine.empty());
}

TEST_CASE("quantum magnetic sweep has an engine window") {
  SweepSpec spec;
  spec.machine = Machine::Magnetic;
  spec.model = Model::Quantum;
  spec.lambda_h = {0.0, 0.5, 21, AxisScale::Linear};
  spec.tau_h = {0.01, 2.0, 21, AxisScale::Linear};
  spec.lambda_c = 0.485;
  spec.tau_c = 0.001;
  spec.normalize_work = true;
  const auto grid = run_sweep(spec);
  int engines = 0;
  for (const auto& c : grid.cells) {
    if (c.mode != Mode::Engine) continue;
    ++engines;
    const double shift = std::floor(c.point.lambda_h.value());
    CHECK(c.point.lambda_c.value() - (c.point.lambda_h.value() - shift) < 1.0);
  }
  CHECK(engines > 0);
  // lambda_h = 0.25 is column 10; tau_h = 1.005 is row 10.
  CHECK(grid.at(10, 10).mode == Mode::Engine);
  CHECK_FALSE(grid.boundary_engine.empty());
  const auto text = csv(grid);
  CHECK(text.substr(0, text.find('\n')) ==
        "lambda_h,tau_h,lambda_c,tau_c,machine,model,q_c,q_h,w,mode,"
        "efficiency,cop,w_over_e16");
}

TEST_CASE("failing cells carry their coordinates") {
  auto spec = small_electric();
  spec.model = Model::Quantum;
  spec.lambda_h = {1.0, 2.0, 2, AxisScale::Linear};
  spec.tau_h = {1.0, 400.0, 2, AxisScale::Linear};
  spec.options.electric_max_cutoff = 64;
  try {
    run_sweep(spec);
    FAIL("expected SweepCellError");
  } catch (const SweepCellError& e) {
    CHECK(e.lambda_h == 1.0);
    CHECK(e.tau_h == 400.0);
    CHECK(std::string(e.what()).find("tau_h=400") != std::string::npos);
  }
}

TEST_CASE("momentum curves") {
  const std::vector<double> taus{0.01, 0.1, 0.5};
  const auto rows = momentum_curve({0.0, 3.0, 301, AxisScale::Linear}, taus);
  REQUIRE(rows.size() == 3 * 301);
  CHECK(rows[0].tau == 0.01);
  CHECK(rows[301].tau == 0.1);
  for (const auto& r : rows) {
    CHECK(r.epsilon == doctest::Approx(r.mean_lz - r.lambda).epsilon(1e-15));
    if (std::abs(r.lambda - 0.5) < 1e-12) {
      CHECK(std::abs(r.mean_lz - 0.5) < 1e-12);
    }
    if (r.tau == 0.5) CHECK(std::abs(r.epsilon) < 5e-4);
    if (r.tau == 0.01) {
      const double frac = r.lambda - std::floor(r.lambda);
      if (std::abs(frac - 0.5) >= 0.05) {
        CHECK(std::abs(r.mean_lz - std::round(r.lambda)) < 0.02);
      }
    }
  }
  std::ostringstream out;
  write_momentum_csv(rows, out);
  CHECK(out.str().substr(0, 27) == "lambda,tau,mean_lz,epsilon\n");
}

TEST_CASE("zero contours") {
  const std::vector<double> xs{0.0, 0.5, 1.0, 1.5, 2.0};
  const std::vector<double> ys{0.0, 1.0, 2.0};
  SUBCASE("uniform sign") {
    const std::vector<double> f(15, 1.0);
    CHECK(contour_zero(f, xs, ys).empty());
  }
  SUBCASE("vertical line") {
    std::vector<double> f;
    for (double y : ys) {
      for (double x : xs) f.push_back(x - 1.2 + 0.0 * y);
    }
    const auto lines = contour_zero(f, xs, ys);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].size() == 3);
    for (const auto& p : lines[0]) CHECK(p.x == doctest::Approx(1.2));
  }
  SUBCASE("closed loop around a dip") {
    const std::vector<double> xs3{0.0, 1.0, 2.0};
    std::vector<double> f(9, 1.0);
    f[4] = -1.0;
    const auto lines = contour_zero(f, xs3, ys);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].size() == 5);
    CHECK(lines[0].front() == lines[0].back());
  }
  SUBCASE("saddle cell") {
    const std::vector<double> two{0.0, 1.0};
    const std::vector<double> f{-1.0, 1.0, 1.0, -1.0};
    const auto lines = contour_zero(f, two, two);
    CHECK(lines.size() == 2);
  }
  SUBCASE("size mismatch") {
    const std::vector<double> f(3, 1.0);
    CHECK_THROWS_AS(contour_zero(f, xs, ys), std::invalid_argument);
  }
  SUBCASE("segments only cross sign-changing edges") {
    std::vector<double> f;
    for (double y : ys) {
      for (double x : xs) f.push_back((x - 0.7) * (x - 0.7) + y - 1.3);
    }
    for (const auto& line : contour_zero(f, xs, ys)) {
      for (const auto& p : line) {
        const bool on_x = std::find(xs.begin(), xs.end(), p.x) != xs.end();
        const bool on_y = std::find(ys.begin(), ys.end(), p.y) != ys.end();
        CHECK((on_x || on_y));
      }
    }
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(-0.058220086193284992) == "-0.05822008619328499");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("CSV layout") {
  auto spec = small_electric();
  spec.lambda_h.count = 3;
  spec.tau_h.count = 2;
  const auto text = csv(run_sweep(spec));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "lambda_h,tau_h,lambda_c,tau_c,machine,model,q_c,q_h,w,mode,"
        "efficiency,cop");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 11);
    if (line.find(",Heater,") != std::string::npos) {
      CHECK(line.substr(line.size() - 2) == ",,");
    }
  }
  CHECK(rows == 6);
}

TEST_CASE("JSON round trip") {
  SweepSpec spec;
  spec.machine = Machine::Magnetic;
  spec.model = Model::Quantum;
  spec.lambda_h = {0.0, 0.5, 7, AxisScale::Linear};
  spec.tau_h = {0.03, 2.0, 6, AxisScale::Log};
  spec.lambda_c = 0.485;
  spec.tau_c = 0.025;
  spec.normalize_work = true;
  const auto grid = run_sweep(spec);

  const auto path = scratch("roundtrip.json");
  write_json(grid, path);
  CHECK_FALSE(fs::exists(path.string() + ".partial"));
  const auto back = read_json(path);
  CHECK(back.spec == grid.spec);
  CHECK(back.lambda_values == grid.lambda_values);
  CHECK(back.tau_values == grid.tau_values);
  CHECK(back.cells == grid.cells);
  CHECK(back.boundary_engine == grid.boundary_engine);
  CHECK(back.boundary_fridge == grid.boundary_fridge);
  CHECK(csv(back) == csv(grid));

  const auto j = to_json(grid);
  CHECK(j.at("format") == "rotor_otto.sweep/1");
  CHECK(j.at("extensions").contains("cop"));
  CHECK(j.at("cells").at(0).contains("w_over_e16"));
}

TEST_CASE("file output errors") {
  auto spec = small_electric();
  spec.lambda_h.count = 2;
  spec.tau_h.count = 2;
  const auto grid = run_sweep(spec);
  const auto missing = scratch("no_such_dir") / "out.csv";
  CHECK_THROWS_AS(write_csv(grid, missing), IoError);
  CHECK_FALSE(fs::exists(missing.string() + ".partial"));
  try {
    write_json(grid, missing);
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("out.csv") != std::string::npos);
    CHECK(e.path == missing);
  }
  CHECK_THROWS_AS(read_json(scratch("absent.json")), IoError);

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_AS(read_json(bad), IoError);

  const auto path = scratch("ok.csv");
  write_csv(grid, path);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == csv(grid));
}
