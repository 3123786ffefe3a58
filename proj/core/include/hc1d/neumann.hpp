#pragma once

#include <vector>

#include "hc1d/bands.hpp"
#include "hc1d/medium.hpp"

namespace hc1d {

/// Eigenmode of the weighted Neumann problem -(a_D u')' = lambda rho_D u on
/// the defect interval with vanishing co-derivative at both ends. The
/// eigenfunction is sampled together with its co-derivative and normalised
/// in the rho_D-weighted L2 inner product.
struct NeumannMode {
  double lambda0;
  int index;  // 0 = constant kernel mode
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> flux;  // a_D u'
  double end_flux_residual;  // |a_D u'(d_plus)| after the shooting solve
};

/// Lowest n_max+1 Neumann modes (indices 0..n_max) found by shooting from
/// d_minus with Cauchy data (1, 0) and bisecting the end co-derivative on a
/// lambda grid. The grid refines itself (up to a few rounds) when roots are
/// missed. shoot_tol is the relative bisection tolerance on lambda.
std::vector<NeumannMode> neumann_modes(const DefectSpec& defect, int n_max,
                                       double shoot_tol = 1e-13);

/// Value and co-derivative of the (unnormalised) shooting solution together
/// with the end-flux mismatch F(lambda); the modes are the roots of F.
double neumann_shooting_function(const DefectSpec& defect, double lambda);

/// A Neumann mode that falls in a spectral gap of the limit problem.
struct GapMode {
  NeumannMode mode;
  int gap_index;         // 0-based index into BandStructure::gaps
  double edge_distance;  // distance to the nearest gap edge
};

/// Keeps exactly the modes whose eigenvalue lies strictly inside a gap.
/// Throws RangeError when a mode lies beyond the computed lambda range.
std::vector<GapMode> gap_filter(const std::vector<NeumannMode>& modes,
                                const BandStructure& bands);

}  // namespace hc1d
