#pragma once

#include <cmath>
#include <optional>

#include "hc1d/profile.hpp"

namespace hc1d {

/// Unit periodicity cell (0,1) split into a soft part (0,h) and a stiff part (h,1).
struct CellGeometry {
  double h = 0.5;
};

/// Compactly supported replacement of the periodic coefficients on (d_minus, d_plus).
struct DefectSpec {
  double d_minus;
  double d_plus;
  CoefficientProfile a;
  CoefficientProfile rho;

  double length() const { return d_plus - d_minus; }
  double center() const { return 0.5 * (d_minus + d_plus); }
};

/// Full problem description: cell geometry, the four periodic coefficients,
/// an optional defect, and the contrast parameter epsilon.
///
/// The stiffness seen at a physical point x is epsilon^2 a0(x/epsilon mod 1)
/// on soft cells and a1(x/epsilon mod 1) on stiff cells; densities are
/// unscaled. On the defect interval the defect profiles take over.
/// Instances are immutable after validation and safe to share across threads.
struct MediumSpec {
  CellGeometry geometry;
  CoefficientProfile a0;    // support [0, h]
  CoefficientProfile a1;    // support [h, 1]
  CoefficientProfile rho0;  // support [0, h]
  CoefficientProfile rho1;  // support [h, 1]
  std::optional<DefectSpec> defect;
  double epsilon = 0.1;

  /// Throws ValidationError when any invariant fails.
  void validate() const;

  /// Integral of rho1 over the stiff part of the cell.
  double stiff_rho_integral() const { return rho1.integral(geometry.h, 1.0); }

  /// Copy with a different contrast parameter (everything else shared).
  MediumSpec with_epsilon(double eps) const {
    MediumSpec s = *this;
    s.epsilon = eps;
    return s;
  }

  /// Copy with the defect stripped (the purely periodic medium).
  MediumSpec without_defect() const {
    MediumSpec s = *this;
    s.defect.reset();
    return s;
  }
};

struct EpsCoefficients {
  double a;
  double rho;
};

/// Pointwise coefficients of the contrast-scaled medium at a physical point.
/// Interface points follow the right-limit convention; the defect interval is
/// [d_minus, d_plus) under the same convention. Total on the real line.
EpsCoefficients evaluate_eps_coefficients(const MediumSpec& spec, double x);

/// Fractional cell coordinate x/epsilon mod 1 in [0, 1).
inline double cell_coordinate(const MediumSpec& spec, double x) {
  const double t = x / spec.epsilon;
  double y = t - std::floor(t);
  if (y >= 1.0) y = 0.0;  // guard against floor rounding at cell boundaries
  return y;
}

}  // namespace hc1d
