#ifndef ROTOR_OTTO_QELECTRIC_HPP_
#define ROTOR_OTTO_QELECTRIC_HPP_

// Quantum pendulum H(lambda) = L^2/2 + lambda sin^2(alpha/2) in the truncated
// momentum basis m = -M..M. With sin^2(alpha/2) = 1/2 - (e^{i alpha} +
// e^{-i alpha})/4 the matrix is symmetric tridiagonal:
//
//   <m|H|m> = m^2/2 + lambda/2,   <m+1|H|m> = -lambda/4.
//
// Averages of H(lambda_i) in the Gibbs state of H(lambda_j) use
// H(lambda_i) = H(lambda_j) + (lambda_i - lambda_j) S with
// S = sin^2(alpha/2), so each stroke needs a single diagonalization.

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rotor_otto/units.hpp"

namespace rotor_otto {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-major dense matrix.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  double operator()(int r, int c) const { return data[c * rows + r]; }
  double& operator()(int r, int c) { return data[c * rows + r]; }
  std::span<const double> column(int c) const {
    return {data.data() + static_cast<std::size_t>(c) * rows,
            static_cast<std::size_t>(rows)};
  }
};

struct TridiagonalHamiltonian {
  std::vector<double> diag;     // m^2/2 + lambda/2, m = -M..M
  std::vector<double> offdiag;  // -lambda/4
  int cutoff_m = 0;
  double lambda = 0.0;
};

struct SpectralData {
  std::vector<double> eigenvalues;          // ascending
  std::optional<DenseMatrix> eigenvectors;  // column k pairs eigenvalue k
  int cutoff_m = 0;
  bool converged = false;  // set only by certify_spectrum
  double convergence_residual = 0.0;
};

/// Throws std::domain_error for lambda < 0 or cutoff_m < 1.
TridiagonalHamiltonian build_pendulum_hamiltonian(ControlParam lambda,
                                                  int cutoff_m);

/// Implicit-shift QL on a symmetric tridiagonal matrix. Eigenvalues are
/// returned sorted; eigenvectors (if requested) are orthonormal columns.
/// Throws ConvergenceError after 60 sweeps on a single eigenvalue.
struct TridiagonalEigen {
  std::vector<double> values;
  std::optional<DenseMatrix> vectors;
};
TridiagonalEigen tridiagonal_eigen(std::span<const double> diag,
                                   std::span<const double> offdiag,
                                   bool want_vectors);

/// Eigenvectors for the `count` lowest of the ascending `values` by inverse
/// iteration, reorthogonalized inside clusters of close eigenvalues. Costs
/// O(count * n) memory where tridiagonal_eigen needs O(n^2).
DenseMatrix tridiagonal_eigenvectors(std::span<const double> diag,
                                     std::span<const double> offdiag,
                                     std::span<const double> values,
                                     int count);

/// Spectrum of a pendulum Hamiltonian from build_pendulum_hamiltonian. Uses
/// the m -> -m symmetry: the symmetric and antisymmetric blocks are solved
/// separately and merged, and eigenvectors are returned in the m basis.
SpectralData eigensolve_sym_tridiagonal(const TridiagonalHamiltonian& h,
                                        bool want_vectors);

struct PendulumLevels {
  int cutoff_m = 0;
  std::vector<double> energies;       // all 2M+1 levels, ascending
  std::vector<double> s_expectation;  // <n|S|n>, lowest levels only
};

/// Levels of the truncated pendulum, with <S> for every state whose energy
/// lies within `window` of the ground state (all states by default).
PendulumLevels pendulum_levels(
    ControlParam lambda, int cutoff_m,
    double window = std::numeric_limits<double>::infinity());

struct ThermalAverages {
  double energy = 0.0;         // <H(lambda)>
  double sin2_half = 0.0;      // <S>
  double log_partition = 0.0;  // ln sum exp(-E_n / tau)
};

/// Below this temperature only the ground state is populated.
inline constexpr double kGroundStateTemperature = 1e-6;

/// Boltzmann sums stop at states this many nats above the ground state.
inline constexpr double kThermalWindowNats = 50.0;

/// Throws std::logic_error when `levels` lacks <S> for a state inside the
/// thermal window at tau.
ThermalAverages thermal_averages(const PendulumLevels& levels,
                                 ReducedTemperature tau);

/// Lazily built pendulum levels for one lambda at cutoffs 32, 64, ...
/// Not thread-safe; give each worker its own instance.
class PendulumSpectra {
 public:
  explicit PendulumSpectra(ControlParam lambda);

  ControlParam lambda() const noexcept { return lambda_; }

  /// Levels at the cutoff, covering the thermal window at tau.
  const PendulumLevels& at_cutoff(int cutoff_m, ReducedTemperature tau);

 private:
  ControlParam lambda_;
  std::map<int, PendulumLevels> by_cutoff_;
};

inline constexpr int kInitialCutoff = 32;
inline constexpr int kMaximumCutoff = 1 << 15;

/// Mean-energy quartet of the quantum pendulum cycle. The basis cutoff
/// starts at 32 and doubles until no quartet entry moves by tol or more;
/// throws ConvergenceError past max_cutoff.
MeanEnergyQuartet thermal_quartet_electric(const CyclePoint& point,
                                           double tol = 1e-10,
                                           int max_cutoff = kMaximumCutoff);

/// Same, reusing caller-owned spectra for the hot and cold strokes.
MeanEnergyQuartet thermal_quartet_electric(const CyclePoint& point, double tol,
                                           PendulumSpectra& hot,
                                           PendulumSpectra& cold,
                                           int max_cutoff = kMaximumCutoff);

/// Diagonalize H(lambda) with cutoff doubling until the thermal energy at tau
/// changes by less than tol; returns the larger-cutoff spectrum flagged as
/// converged.
SpectralData certify_spectrum(ControlParam lambda, ReducedTemperature tau,
                              double tol, bool want_vectors = false,
                              int max_cutoff = kMaximumCutoff);

}  // namespace rotor_otto

#endif  // ROTOR_OTTO_QELECTRIC_HPP_
