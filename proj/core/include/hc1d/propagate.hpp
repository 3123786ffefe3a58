#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hc1d/profile.hpp"

namespace hc1d {

inline constexpr double kDefaultTol = 1e-10;

/// Cauchy state of -(a u')' = lambda rho u in the variables (u, a u');
/// the second component is the co-derivative, continuous across coefficient
/// jumps even when u' is not.
struct PropState {
  double u;
  double v;
};

/// Fundamental-system propagator across [lo, hi]: columns are the end states
/// of the solutions with Cauchy data (1,0) and (0,1) at lo. Unimodular up to
/// solver tolerance (constant Wronskian).
struct PropagatorMatrix {
  Eigen::Matrix2d m;
  double lo;
  double hi;
  double lambda;
};

/// Propagates -(a u')' = lambda rho u across [lo, hi] as a first-order
/// system in (u, a u'). Piecewise-constant coefficients are composed from
/// exact per-piece rotation/hyperbolic/shear matrices; sampled-grid
/// coefficients fall back to an embedded adaptive Runge-Kutta(4,5) pair with
/// local tolerance `tol`. Throws IntegrationError on step-size underflow.
PropagatorMatrix propagate(const CoefficientProfile& a, const CoefficientProfile& rho,
                           double lambda, double lo, double hi, double tol = kDefaultTol);

/// Cumulative propagators from lo to each point of the ascending list `xs`.
std::vector<Eigen::Matrix2d> propagate_cumulative(const CoefficientProfile& a,
                                                  const CoefficientProfile& rho, double lambda,
                                                  double lo, const std::vector<double>& xs,
                                                  double tol = kDefaultTol);

inline PropState apply(const Eigen::Matrix2d& m, const PropState& s) {
  return {m(0, 0) * s.u + m(0, 1) * s.v, m(1, 0) * s.u + m(1, 1) * s.v};
}

/// Inverse of a unimodular 2x2 matrix.
inline Eigen::Matrix2d unimodular_inverse(const Eigen::Matrix2d& m) {
  Eigen::Matrix2d inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv;
}

}  // namespace hc1d
