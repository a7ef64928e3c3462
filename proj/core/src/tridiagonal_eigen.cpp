#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "rotor_otto/qelectric.hpp"

namespace rotor_otto {

// Implicit QL with Wilkinson-type shifts and deflation on negligible
// off-diagonal entries (the EISPACK tql2 scheme). Rotations are accumulated
// into `z` when eigenvectors are requested.
TridiagonalEigen tridiagonal_eigen(std::span<const double> diag,
                                   std::span<const double> offdiag,
                                   bool want_vectors) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) {
    throw std::invalid_argument("tridiagonal_eigen: empty matrix");
  }
  if (static_cast<int>(offdiag.size()) != n - 1) {
    throw std::invalid_argument(
        "tridiagonal_eigen: off-diagonal must have n - 1 entries");
  }

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());

  DenseMatrix z;
  if (want_vectors) {
    z.rows = z.cols = n;
    z.data.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) z(i, i) = 1.0;
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 60;
  double shift_total = 0.0;
  double scale = 0.0;

  for (int l = 0; l < n; ++l) {
    scale = std::max(scale, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * scale) ++m;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > kMaxSweeps) {
          throw ConvergenceError(
              "tridiagonal_eigen: QL iteration did not converge");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        shift_total += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (want_vectors) {
            double* zi = &z.data[static_cast<std::size_t>(i) * n];
            double* zi1 = zi + n;
            for (int k = 0; k < n; ++k) {
              const double t = zi1[k];
              zi1[k] = s * zi[k] + c * t;
              zi[k] = c * zi[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * scale);
    }
    d[l] += shift_total;
    e[l] = 0.0;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d[a] < d[b]; });

  TridiagonalEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.values[k] = d[order[k]];
  if (want_vectors) {
    DenseMatrix sorted{n, n, std::vector<double>(z.data.size())};
    for (int k = 0; k < n; ++k) {
      const auto src = z.column(order[k]);
      std::copy(src.begin(), src.end(),
                sorted.data.begin() + static_cast<std::ptrdiff_t>(k) * n);
    }
    out.vectors = std::move(sorted);
  }
  return out;
}

namespace {

// LU factorization of a tridiagonal matrix with partial pivoting, in the
// layout of LAPACK dgttrf: multipliers in dl, U on d/du/du2. Tiny pivots are
// lifted to +-pivmin so shifted systems at an eigenvalue stay solvable.
class ShiftedTridiagonalLU {
 public:
  ShiftedTridiagonalLU(std::span<const double> diag,
                       std::span<const double> offdiag, double shift,
                       double pivmin)
      : n_(diag.size()),
        dl_(offdiag.begin(), offdiag.end()),
        d_(diag.size()),
        du_(offdiag.begin(), offdiag.end()),
        du2_(n_ > 2 ? n_ - 2 : 0, 0.0),
        swapped_(n_ > 1 ? n_ - 1 : 0, false) {
    for (std::size_t i = 0; i < n_; ++i) d_[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = pivmin;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double t = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = t - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    for (double& p : d_) {
      if (std::abs(p) < pivmin) p = std::copysign(pivmin, p == 0.0 ? 1.0 : p);
    }
  }

  void solve(std::vector<double>& b) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (swapped_[i]) {
        const double t = b[i];
        b[i] = b[i + 1];
        b[i + 1] = t - dl_[i] * b[i];
      } else {
        b[i + 1] -= dl_[i] * b[i];
      }
    }
    for (std::size_t k = n_; k-- > 0;) {
      double r = b[k];
      if (k + 1 < n_) r -= du_[k] * b[k + 1];
      if (k + 2 < n_) r -= du2_[k] * b[k + 2];
      b[k] = r / d_[k];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> dl_, d_, du_, du2_;
  std::vector<bool> swapped_;
};

void normalize(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
}

}  // namespace

DenseMatrix tridiagonal_eigenvectors(std::span<const double> diag,
                                     std::span<const double> offdiag,
                                     std::span<const double> values,
                                     int count) {
  const int n = static_cast<int>(diag.size());
  if (n == 0 || static_cast<int>(offdiag.size()) != n - 1) {
    throw std::invalid_argument(
        "tridiagonal_eigenvectors: inconsistent matrix dimensions");
  }
  if (count < 0 || count > n || static_cast<int>(values.size()) < count) {
    throw std::invalid_argument("tridiagonal_eigenvectors: bad count");
  }

  double onenrm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    onenrm = std::max(onenrm, row);
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double pivmin = std::max(eps * onenrm, std::numeric_limits<double>::min());
  const double ortol = 1e-3 * onenrm;
  constexpr int kIterations = 3;

  DenseMatrix out{n, count, std::vector<double>(static_cast<std::size_t>(n) * count)};
  std::vector<double> x(static_cast<std::size_t>(n));
  int cluster_start = 0;
  double previous = 0.0;
  for (int j = 0; j < count; ++j) {
    double mu = values[j];
    if (j > 0) {
      if (mu - values[j - 1] > ortol) cluster_start = j;
      // Separate coincident shifts so each solve sees a distinct system.
      const double pertol = 10.0 * std::abs(eps * mu);
      if (mu - previous < pertol) mu = previous + pertol;
    }
    previous = mu;

    std::mt19937 rng(static_cast<unsigned>(j + 1));
    for (double& v : x) v = static_cast<double>(rng()) / 4294967296.0 - 0.5;
    normalize(x);

    const ShiftedTridiagonalLU lu(diag, offdiag, mu, pivmin);
    for (int it = 0; it < kIterations; ++it) {
      lu.solve(x);
      normalize(x);
      for (int pass = 0; pass < 2; ++pass) {
        for (int k = cluster_start; k < j; ++k) {
          const auto v = out.column(k);
          double dot = 0.0;
          for (int i = 0; i < n; ++i) dot += v[i] * x[i];
          for (int i = 0; i < n; ++i) x[i] -= dot * v[i];
        }
      }
      normalize(x);
    }
    // Fix the sign so the largest component is positive.
    const auto peak = std::max_element(
        x.begin(), x.end(),
        [](double a, double b) { return std::abs(a) < std::abs(b); });
    const double sign = *peak < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) out(i, j) = sign * x[i];
  }
  return out;
}

}  // namespace rotor_otto
