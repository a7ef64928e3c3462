#ifndef ROTOR_OTTO_ORACLES_ORACLES_HPP_
#define ROTOR_OTTO_ORACLES_ORACLES_HPP_

// Brute-force reference computations. Each one reaches its answer by a route
// that shares no numerical code with the production path it is compared
// against: plain power series instead of continued fractions, phase-space
// quadrature instead of Bessel functions, dense diagonalization instead of
// tridiagonal QL, finite differences instead of eigenvector expectations.

#include <span>
#include <vector>

namespace rotor_otto::oracles {

/// sum_{k < terms} (x/2)^{2k} / (k!)^2
double bessel_i0_series(double x, int terms = 30);
/// sum_{k < terms} (x/2)^{2k+1} / (k! (k+1)!)
double bessel_i1_series(double x, int terms = 30);

/// <H(lambda_i)> for the classical pendulum in the Gibbs state of
/// (lambda_j, tau_j): the momentum integral is done analytically (tau_j/2)
/// and the angle average of lambda_i sin^2(alpha/2) by adaptive
/// trapezoidal quadrature over one period.
double classical_electric_energy_quadrature(double lambda_i, double lambda_j,
                                            double tau_j);

/// All eigenvalues of the symmetric tridiagonal matrix, ascending, from a
/// dense self-adjoint eigensolver.
std::vector<double> dense_eigenvalues(std::span<const double> diag,
                                      std::span<const double> offdiag);

/// ln Z of the truncated pendulum from dense eigenvalues.
double pendulum_log_partition_dense(double lambda, int cutoff_m, double tau);

/// <sin^2(alpha/2)> = -tau d(ln Z)/d(lambda), central difference with step h.
double pendulum_sin2_finite_difference(double lambda, int cutoff_m, double tau,
                                       double h = 1e-4);

/// ln sum_m exp(-m (m - 2 lambda) / (2 tau)) over |m| <= m_max, summed
/// naively relative to the largest term.
double magnetic_log_partition_brute(double lambda, double tau,
                                    int m_max = 2000);

/// <L>/hbar - lambda by the same naive summation.
double magnetic_epsilon_brute(double lambda, double tau, int m_max = 2000);

}  // namespace rotor_otto::oracles

#endif  // ROTOR_OTTO_ORACLES_ORACLES_HPP_
