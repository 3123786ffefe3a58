#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hc1d/medium.hpp"
#include "hc1d/tridiag.hpp"

namespace hc1d {

/// Brute-force reference problem: the contrast-scaled medium with its defect
/// restricted to [center - half_width, center + half_width] with Dirichlet
/// ends. The window must be wide enough that the defect-mode decay makes the
/// truncation negligible; every coefficient interface becomes a grid node.
struct TruncatedProblem {
  MediumSpec spec;
  double center = 0.0;
  double half_width = 2.0;
  int nodes_per_cell = 32;
};

/// Window half-width making exp(-nu_star (L - max|d|)/eps) < 1e-12 with
/// a comfortable margin.
double default_half_width(const MediumSpec& spec, double nu_star);

/// Conservative three-point discretization of the truncated problem:
/// stiffness from harmonic-average flux coefficients, lumped mass. Grid
/// nodes exclude the Dirichlet endpoints.
struct FdPencil {
  std::vector<double> x;  // interior nodes
  RealSymTridiag k;
  RealSymTridiag m;  // diagonal (off entries are zero)
  double x_lo;
  double x_hi;
};

FdPencil discretize(const TruncatedProblem& prob);

struct GapEigenpair {
  double lambda;
  Eigen::VectorXd u;  // M-normalised on the grid
  double residual;    // ||K u - lambda M u|| / ||M u||
  double boundary_mass_fraction;
  bool flagged;  // truncation artifact hugging the window ends
};

/// All pencil eigenvalues inside (gap_lo, gap_hi) with eigenvectors.
/// Eigenvalues come from Sturm-count bisection (machine-precision brackets),
/// eigenvectors from inverse iteration; clusters are deflated so multiple
/// roots yield an orthonormal set. Modes whose mass fraction in the outer
/// quarter of the window exceeds 1e-6 are flagged as truncation artifacts.
std::vector<GapEigenpair> gap_eigenpairs(const TruncatedProblem& prob, double gap_lo,
                                         double gap_hi, double bisect_tol = 1e-11);

/// Same, on an already-assembled pencil.
std::vector<GapEigenpair> gap_eigenpairs(const FdPencil& fd, double gap_lo, double gap_hi,
                                         double bisect_tol = 1e-11);

/// L2 mass of `u` restricted to {x : dist(x, [a,b]) > margin}, relative to
/// the total, in the pencil's lumped inner product.
double mass_fraction_outside(const FdPencil& fd, const Eigen::VectorXd& u, double a, double b,
                             double margin);

}  // namespace hc1d
