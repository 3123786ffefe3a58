#pragma once

#include <vector>

#include "hc1d/medium.hpp"

namespace hc1d {

struct Interval {
  double lo;
  double hi;
  double width() const { return hi - lo; }
  bool contains(double x) const { return x > lo && x < hi; }
};

/// Limit band-gap structure on [0, lambda_max]: the closed intervals where
/// the discriminant satisfies |D| <= 2, their open complements, and the raw
/// discriminant samples used to locate the edges.
struct BandStructure {
  double lambda_max;
  double root_tol;
  std::vector<Interval> bands;
  std::vector<Interval> gaps;  // gaps[k] separates bands[k] and bands[k+1]
  std::vector<std::pair<double, double>> samples;  // (lambda, D(lambda))
  int refinement_rounds = 0;  // local grid refinements that were needed

  /// Index (0-based) of the gap strictly containing lambda, or -1.
  int gap_index(double lambda) const;
  /// True when lambda lies in some band (closed intervals).
  bool in_band(double lambda) const;
};

/// Samples the discriminant on a uniform grid, brackets every crossing of
/// +-2 and refines each edge by bisection to root_tol. Grid cells that
/// contain crossings of both +2 and -2 are re-sampled 10x locally, up to
/// three rounds, before giving up.
BandStructure compute_bands(const MediumSpec& spec, double lambda_max = 200.0, int grid_n = 20000,
                            double root_tol = 1e-10);

/// Dispersion curve of band n (1-based): solves D(lambda) = 2 cos(theta) in
/// the band bracket by bisection for each requested quasimomentum.
struct BandFunction {
  int n;
  std::vector<double> theta;
  std::vector<double> lambda;
};

BandFunction band_function(const MediumSpec& spec, const BandStructure& bands, int n,
                           const std::vector<double>& theta_grid);

/// Convenience overload computing the band structure with defaults.
BandFunction band_function(const MediumSpec& spec, int n, const std::vector<double>& theta_grid);

/// Uniform grid of `count` points on [0, pi] (band functions are even in
/// theta, so half the Brillouin zone suffices).
std::vector<double> default_theta_grid(int count = 64);

}  // namespace hc1d
