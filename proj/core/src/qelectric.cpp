#include "rotor_otto/qelectric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rotor_otto {

TridiagonalHamiltonian build_pendulum_hamiltonian(ControlParam lambda,
                                                  int cutoff_m) {
  const double l = lambda.value();
  require_non_negative_field(l, "build_pendulum_hamiltonian");
  if (cutoff_m < 1) {
    throw std::domain_error("build_pendulum_hamiltonian: cutoff must be >= 1");
  }
  TridiagonalHamiltonian h;
  h.cutoff_m = cutoff_m;
  h.lambda = l;
  const int n = 2 * cutoff_m + 1;
  h.diag.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double m = k - cutoff_m;
    h.diag[k] = 0.5 * m * m + 0.5 * l;
  }
  h.offdiag.assign(static_cast<std::size_t>(n - 1), -0.25 * l);
  return h;
}

namespace {

// H commutes with the parity m -> -m. In the symmetric basis |0>,
// (|m> + |-m>)/sqrt(2) and the antisymmetric basis (|m> - |-m>)/sqrt(2),
// m = 1..M, it splits into two tridiagonal blocks whose diagonals grow from
// the top-left corner. QL is accurate to a few ulps of each eigenvalue on such
// graded matrices, and no block contains the near-degenerate +-m pairs of the
// full matrix.
struct ParityBlock {
  bool even = true;
  std::vector<double> diag;
  std::vector<double> offdiag;
  std::vector<double> s_offdiag;  // off-diagonal of S in the same basis
};

ParityBlock parity_block(const TridiagonalHamiltonian& h, bool even) {
  const int first = even ? 0 : 1;
  const int size = h.cutoff_m + 1 - first;
  ParityBlock b;
  b.even = even;
  b.diag.resize(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) {
    const double m = k + first;
    b.diag[k] = 0.5 * m * m + 0.5 * h.lambda;
  }
  b.s_offdiag.assign(static_cast<std::size_t>(size - 1), -0.25);
  if (even && size > 1) b.s_offdiag[0] = -0.25 * std::sqrt(2.0);
  b.offdiag.resize(b.s_offdiag.size());
  for (std::size_t k = 0; k < b.offdiag.size(); ++k) {
    b.offdiag[k] = h.lambda * b.s_offdiag[k];
  }
  return b;
}

double s_expectation(const ParityBlock& b, std::span<const double> u) {
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    s += 0.5 * u[k] * u[k];
    if (k + 1 < u.size()) s += 2.0 * b.s_offdiag[k] * u[k] * u[k + 1];
  }
  return s;
}

struct LevelRef {
  double energy;
  int block;  // 0 even, 1 odd
  int index;
};

std::vector<LevelRef> merge_levels(const std::vector<double>& even,
                                   const std::vector<double>& odd) {
  std::vector<LevelRef> out;
  out.reserve(even.size() + odd.size());
  std::size_t i = 0, j = 0;
  while (i < even.size() || j < odd.size()) {
    if (j == odd.size() || (i < even.size() && even[i] <= odd[j])) {
      out.push_back({even[i], 0, static_cast<int>(i)});
      ++i;
    } else {
      out.push_back({odd[j], 1, static_cast<int>(j)});
      ++j;
    }
  }
  return out;
}

// <S> for the lowest `count` states of a block. The full QL eigenvector
// matrix is only built when most of the block is wanted; otherwise the few
// low states come from inverse iteration.
std::vector<double> block_s(const ParityBlock& b,
                            const std::vector<double>& values, int count) {
  std::vector<double> s(static_cast<std::size_t>(count));
  if (count == 0) return s;
  const int n = static_cast<int>(values.size());
  if (2 * count >= n) {
    const auto full = tridiagonal_eigen(b.diag, b.offdiag, true);
    for (int k = 0; k < count; ++k) s[k] = s_expectation(b, full.vectors->column(k));
  } else {
    const auto v = tridiagonal_eigenvectors(b.diag, b.offdiag, values, count);
    for (int k = 0; k < count; ++k) s[k] = s_expectation(b, v.column(k));
  }
  return s;
}

bool covers(const PendulumLevels& levels, double window) {
  const std::size_t have = levels.s_expectation.size();
  return have == levels.energies.size() ||
         levels.energies[have] - levels.energies.front() > window;
}

}  // namespace

SpectralData eigensolve_sym_tridiagonal(const TridiagonalHamiltonian& h,
                                        bool want_vectors) {
  const auto even = parity_block(h, true);
  const auto odd = parity_block(h, false);
  const auto ee = tridiagonal_eigen(even.diag, even.offdiag, want_vectors);
  const auto eo = tridiagonal_eigen(odd.diag, odd.offdiag, want_vectors);
  const auto levels = merge_levels(ee.values, eo.values);

  SpectralData out;
  out.cutoff_m = h.cutoff_m;
  out.eigenvalues.reserve(levels.size());
  for (const auto& l : levels) out.eigenvalues.push_back(l.energy);
  if (want_vectors) {
    const int n = 2 * h.cutoff_m + 1;
    const int mid = h.cutoff_m;
    const double r = 1.0 / std::sqrt(2.0);
    DenseMatrix v{n, n, std::vector<double>(static_cast<std::size_t>(n) * n)};
    for (int col = 0; col < n; ++col) {
      const auto& l = levels[col];
      if (l.block == 0) {
        const auto u = ee.vectors->column(l.index);
        v(mid, col) = u[0];
        for (int m = 1; m <= h.cutoff_m; ++m) {
          v(mid + m, col) = r * u[m];
          v(mid - m, col) = r * u[m];
        }
      } else {
        const auto u = eo.vectors->column(l.index);
        for (int m = 1; m <= h.cutoff_m; ++m) {
          v(mid + m, col) = r * u[m - 1];
          v(mid - m, col) = -r * u[m - 1];
        }
      }
    }
    out.eigenvectors = std::move(v);
  }
  return out;
}

PendulumLevels pendulum_levels(ControlParam lambda, int cutoff_m,
                               double window) {
  const auto h = build_pendulum_hamiltonian(lambda, cutoff_m);
  const ParityBlock blocks[2] = {parity_block(h, true), parity_block(h, false)};
  std::vector<double> values[2];
  for (int b = 0; b < 2; ++b) {
    values[b] = tridiagonal_eigen(blocks[b].diag, blocks[b].offdiag, false).values;
  }
  const auto levels = merge_levels(values[0], values[1]);
  const double e0 = levels.front().energy;

  // Each block supplies <S> for its states inside the window plus one more,
  // so the merged prefix with known <S> always reaches past the window.
  std::vector<double> s[2];
  for (int b = 0; b < 2; ++b) {
    const auto& v = values[b];
    int count = 0;
    while (count < static_cast<int>(v.size()) && v[count] - e0 <= window) ++count;
    count = std::min(static_cast<int>(v.size()), count + 1);
    s[b] = block_s(blocks[b], v, count);
  }

  PendulumLevels out;
  out.cutoff_m = cutoff_m;
  out.energies.reserve(levels.size());
  bool prefix = true;
  for (const auto& l : levels) {
    out.energies.push_back(l.energy);
    if (prefix && l.index < static_cast<int>(s[l.block].size())) {
      out.s_expectation.push_back(s[l.block][l.index]);
    } else {
      prefix = false;
    }
  }
  return out;
}

ThermalAverages thermal_averages(const PendulumLevels& levels,
                                 ReducedTemperature tau) {
  const double t = tau.value();
  const double e0 = levels.energies.front();
  ThermalAverages out;
  if (t < kGroundStateTemperature) {
    out.energy = e0;
    out.sin2_half = levels.s_expectation.front();
    out.log_partition = -e0 / t;
    return out;
  }
  const double window = kThermalWindowNats * t;
  if (!covers(levels, window)) {
    throw std::logic_error(
        "thermal_averages: levels do not cover the thermal window");
  }
  double norm = 0.0;
  double energy = 0.0;
  double s = 0.0;
  for (std::size_t n = 0; n < levels.s_expectation.size(); ++n) {
    const double gap = levels.energies[n] - e0;
    if (gap > window) break;
    const double w = std::exp(-gap / t);
    norm += w;
    energy += w * levels.energies[n];
    s += w * levels.s_expectation[n];
  }
  out.energy = energy / norm;
  out.sin2_half = s / norm;
  out.log_partition = -e0 / t + std::log(norm);
  return out;
}

PendulumSpectra::PendulumSpectra(ControlParam lambda) : lambda_(lambda) {
  require_non_negative_field(lambda.value(), "PendulumSpectra");
}

const PendulumLevels& PendulumSpectra::at_cutoff(int cutoff_m,
                                                 ReducedTemperature tau) {
  const double window = kThermalWindowNats * tau.value();
  auto it = by_cutoff_.find(cutoff_m);
  if (it == by_cutoff_.end()) {
    it = by_cutoff_
             .emplace(cutoff_m, pendulum_levels(lambda_, cutoff_m, window))
             .first;
  } else if (!covers(it->second, window)) {
    // Widen generously so a column of rising temperatures rarely repeats
    // the eigenvector work.
    it->second = pendulum_levels(lambda_, cutoff_m, 2.0 * window);
  }
  return it->second;
}

namespace {

MeanEnergyQuartet quartet_at_cutoff(const CyclePoint& p, int cutoff_m,
                                    PendulumSpectra& hot,
                                    PendulumSpectra& cold) {
  const auto th = thermal_averages(hot.at_cutoff(cutoff_m, p.tau_h), p.tau_h);
  const auto tc = thermal_averages(cold.at_cutoff(cutoff_m, p.tau_c), p.tau_c);
  const double dl = p.lambda_h.value() - p.lambda_c.value();
  return {
      .hh = th.energy,
      .hc = tc.energy + dl * tc.sin2_half,
      .ch = th.energy - dl * th.sin2_half,
      .cc = tc.energy,
  };
}

double max_change(const MeanEnergyQuartet& a, const MeanEnergyQuartet& b) {
  return std::max({std::abs(a.hh - b.hh), std::abs(a.hc - b.hc),
                   std::abs(a.ch - b.ch), std::abs(a.cc - b.cc)});
}

[[noreturn]] void cutoff_exhausted(const char* what, int max_cutoff,
                                   double lambda, double tau) {
  std::ostringstream msg;
  msg << what << ": no convergence below cutoff " << max_cutoff
      << " (lambda=" << lambda << ", tau=" << tau << ")";
  throw ConvergenceError(msg.str());
}

}  // namespace

MeanEnergyQuartet thermal_quartet_electric(const CyclePoint& point,
                                           double tol, int max_cutoff) {
  PendulumSpectra hot(point.lambda_h);
  PendulumSpectra cold(point.lambda_c);
  return thermal_quartet_electric(point, tol, hot, cold, max_cutoff);
}

MeanEnergyQuartet thermal_quartet_electric(const CyclePoint& point, double tol,
                                           PendulumSpectra& hot,
                                           PendulumSpectra& cold,
                                           int max_cutoff) {
  if (!(tol > 0.0)) {
    throw std::domain_error("thermal_quartet_electric: tol must be > 0");
  }
  if (hot.lambda() != point.lambda_h || cold.lambda() != point.lambda_c) {
    throw std::invalid_argument(
        "thermal_quartet_electric: spectra do not match the cycle point");
  }
  int cutoff = kInitialCutoff;
  auto quartet = quartet_at_cutoff(point, cutoff, hot, cold);
  while (true) {
    if (2 * cutoff > max_cutoff) {
      cutoff_exhausted("thermal_quartet_electric", max_cutoff,
                       point.lambda_h.value(), point.tau_h.value());
    }
    cutoff *= 2;
    const auto refined = quartet_at_cutoff(point, cutoff, hot, cold);
    const bool done = max_change(quartet, refined) < tol;
    quartet = refined;
    if (done) return quartet;
  }
}

SpectralData certify_spectrum(ControlParam lambda, ReducedTemperature tau,
                              double tol, bool want_vectors,
                              int max_cutoff) {
  PendulumSpectra spectra(lambda);
  int cutoff = kInitialCutoff;
  double energy =
      thermal_averages(spectra.at_cutoff(cutoff, tau), tau).energy;
  while (2 * cutoff <= max_cutoff) {
    cutoff *= 2;
    const double refined =
        thermal_averages(spectra.at_cutoff(cutoff, tau), tau).energy;
    const double residual = std::abs(refined - energy);
    energy = refined;
    if (residual < tol) {
      auto out = eigensolve_sym_tridiagonal(
          build_pendulum_hamiltonian(lambda, cutoff), want_vectors);
      out.converged = true;
      out.convergence_residual = residual;
      return out;
    }
  }
  cutoff_exhausted("certify_spectrum", max_cutoff, lambda.value(),
                   tau.value());
}

}  // namespace rotor_otto
