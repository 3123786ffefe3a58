#pragma once

#include <complex>

#include "hc1d/medium.hpp"
#include "hc1d/propagate.hpp"

namespace hc1d {

/// One-period transfer matrix of the contrast-scaled medium at a fixed
/// spectral parameter. It maps the soft-part Cauchy data (u, a0 u_y) at a
/// lattice point to the next one; trace(M) > 2 in absolute value marks a
/// spectral gap at this epsilon, where the Floquet multipliers mu1, mu2 are
/// real with |mu1| < 1 < |mu2| and mu1*mu2 = 1.
struct TransferMatrix {
  Eigen::Matrix2d m;
  double h_eps;  // trace
  std::complex<double> mu1;
  std::complex<double> mu2;
  double epsilon;
  double lambda;

  bool in_gap() const { return std::abs(h_eps) > 2.0; }
  double mu1_real() const { return mu1.real(); }
};

TransferMatrix transfer_matrix(const MediumSpec& spec, double lambda, double tol = kDefaultTol);

/// Discriminant of the limit problem:
/// v1(h) + (a0 v2')(h) - lambda v2(h) * integral of rho1 over the stiff part.
/// The limit spectrum is exactly { lambda >= 0 : |D(lambda)| <= 2 }.
double limit_discriminant(const MediumSpec& spec, double lambda, double tol = kDefaultTol);

/// Cell-to-cell recurrence matrix of the limit problem; its trace equals the
/// limit discriminant and its Floquet multipliers drive the limit decay.
Eigen::Matrix2d limit_monodromy(const MediumSpec& spec, double lambda, double tol = kDefaultTol);

/// Small-magnitude root of mu^2 - disc*mu + 1 for |disc| > 2, computed
/// cancellation-free; the companion root is 1/mu1. Throws NotInGapError
/// when |disc| <= 2.
double decay_root(double disc);

/// Roots of mu^2 - trace*mu + 1 for any trace (complex pair on bands).
std::pair<std::complex<double>, std::complex<double>> floquet_multipliers(double trace);

/// Eigenvector of a real unimodular 2x2 matrix for a real eigenvalue mu.
/// `use_first_row` selects the row identity used, which keeps the vector a
/// continuous function of the matrix along scans; the other row is the
/// fallback when the preferred one degenerates.
Eigen::Vector2d floquet_eigenvector(const Eigen::Matrix2d& t, double mu,
                                    bool use_first_row = true);

/// Physical-coordinate propagator of the periodic contrast-scaled medium
/// (defect ignored) across [x0, x1], acting on (u, a_eps u'). Assembled from
/// cell-coordinate propagators conjugated by the epsilon flux scaling.
Eigen::Matrix2d propagate_periodic_physical(const MediumSpec& spec, double lambda, double x0,
                                            double x1, double tol = kDefaultTol);

/// Cumulative physical states along ascending points `xs` starting from
/// `s0` at x0 (periodic medium, defect ignored).
std::vector<PropState> periodic_physical_states(const MediumSpec& spec, double lambda, double x0,
                                                PropState s0, const std::vector<double>& xs,
                                                double tol = kDefaultTol);

/// Lattice walls (points epsilon*z and epsilon*(z+h)) inside (x0, x1).
std::vector<double> lattice_walls(const MediumSpec& spec, double x0, double x1);

}  // namespace hc1d
