#include <array>
#include <stdexcept>

#include "rotor_otto/sweep.hpp"

namespace rotor_otto {

namespace {

// Crossing edges are identified by integer ids so that segments from
// neighbouring cells join exactly:
//   horizontal edge (ix, iy)-(ix+1, iy):  iy * (nx - 1) + ix
//   vertical edge   (ix, iy)-(ix, iy+1):  n_horizontal + iy * nx + ix
class EdgeGraph {
 public:
  EdgeGraph(std::size_t nx, std::size_t ny)
      : nx_(nx), n_horizontal_(ny * (nx - 1)),
        links_(n_horizontal_ + (ny - 1) * nx, {kNone, kNone}),
        points_(links_.size()) {}

  std::size_t horizontal(std::size_t ix, std::size_t iy) const {
    return iy * (nx_ - 1) + ix;
  }
  std::size_t vertical(std::size_t ix, std::size_t iy) const {
    return n_horizontal_ + iy * nx_ + ix;
  }

  void set_point(std::size_t edge, Point2 p) { points_[edge] = p; }

  void connect(std::size_t a, std::size_t b) {
    attach(a, b);
    attach(b, a);
  }

  std::vector<Polyline> chain() {
    std::vector<Polyline> out;
    std::vector<bool> used(links_.size(), false);
    // Open chains start at an edge with a single neighbour.
    for (std::size_t e = 0; e < links_.size(); ++e) {
      if (!used[e] && links_[e][0] != kNone && links_[e][1] == kNone) {
        out.push_back(walk(e, used));
      }
    }
    for (std::size_t e = 0; e < links_.size(); ++e) {
      if (!used[e] && links_[e][0] != kNone) {
        auto loop = walk(e, used);
        loop.push_back(loop.front());
        out.push_back(std::move(loop));
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void attach(std::size_t from, std::size_t to) {
    auto& slot = links_[from];
    if (slot[0] == kNone) {
      slot[0] = to;
    } else if (slot[1] == kNone) {
      slot[1] = to;
    } else {
      throw std::logic_error("contour edge shared by more than two segments");
    }
  }

  Polyline walk(std::size_t start, std::vector<bool>& used) const {
    Polyline line;
    std::size_t cur = start;
    while (cur != kNone) {
      used[cur] = true;
      line.push_back(points_[cur]);
      std::size_t next = kNone;
      for (std::size_t n : links_[cur]) {
        if (n != kNone && !used[n]) {
          next = n;
          break;
        }
      }
      cur = next;
    }
    return line;
  }

  std::size_t nx_;
  std::size_t n_horizontal_;
  std::vector<std::array<std::size_t, 2>> links_;
  std::vector<Point2> points_;
};

double crossing(double fa, double fb) { return fa / (fa - fb); }

}  // namespace

std::vector<Polyline> contour_zero(std::span<const double> field,
                                   std::span<const double> xs,
                                   std::span<const double> ys) {
  const std::size_t nx = xs.size();
  const std::size_t ny = ys.size();
  if (nx < 2 || ny < 2 || field.size() != nx * ny) {
    throw std::invalid_argument(
        "contour_zero: field must be nx * ny with nx, ny >= 2");
  }
  auto f = [&](std::size_t ix, std::size_t iy) { return field[iy * nx + ix]; };
  auto inside = [&](std::size_t ix, std::size_t iy) { return f(ix, iy) < 0.0; };

  EdgeGraph graph(nx, ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
      if (inside(ix, iy) != inside(ix + 1, iy)) {
        const double t = crossing(f(ix, iy), f(ix + 1, iy));
        graph.set_point(graph.horizontal(ix, iy),
                        {xs[ix] + t * (xs[ix + 1] - xs[ix]), ys[iy]});
      }
    }
  }
  for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      if (inside(ix, iy) != inside(ix, iy + 1)) {
        const double t = crossing(f(ix, iy), f(ix, iy + 1));
        graph.set_point(graph.vertical(ix, iy),
                        {xs[ix], ys[iy] + t * (ys[iy + 1] - ys[iy])});
      }
    }
  }

  for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
      // Corners a(ix,iy) b(ix+1,iy) c(ix+1,iy+1) d(ix,iy+1).
      const bool a = inside(ix, iy);
      const bool b = inside(ix + 1, iy);
      const bool c = inside(ix + 1, iy + 1);
      const bool d = inside(ix, iy + 1);
      const std::size_t bottom = graph.horizontal(ix, iy);
      const std::size_t top = graph.horizontal(ix, iy + 1);
      const std::size_t left = graph.vertical(ix, iy);
      const std::size_t right = graph.vertical(ix + 1, iy);

      std::vector<std::size_t> cut;
      if (a != b) cut.push_back(bottom);
      if (b != c) cut.push_back(right);
      if (c != d) cut.push_back(top);
      if (d != a) cut.push_back(left);

      if (cut.size() == 2) {
        graph.connect(cut[0], cut[1]);
      } else if (cut.size() == 4) {
        // Saddle: the cell-centre average decides which diagonal is joined.
        const double centre = 0.25 * (f(ix, iy) + f(ix + 1, iy) +
                                      f(ix + 1, iy + 1) + f(ix, iy + 1));
        if ((centre < 0.0) == a) {
          graph.connect(bottom, right);  // isolates b
          graph.connect(top, left);      // isolates d
        } else {
          graph.connect(left, bottom);  // isolates a
          graph.connect(right, top);    // isolates c
        }
      }
    }
  }
  return graph.chain();
}

}  // namespace rotor_otto
