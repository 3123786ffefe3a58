#pragma once

#include <vector>

#include "hc1d/medium.hpp"

namespace hc1d {

/// One maximal interval on which the contrast-scaled medium is described by
/// a single profile: a soft or stiff lattice piece (possibly clipped by the
/// window or the defect) or a defect sub-piece.
struct MediumPiece {
  enum class Kind { Soft, Stiff, Defect };
  Kind kind;
  double x0;
  double x1;
  long cell;  // lattice cell index for soft/stiff pieces

  double length() const { return x1 - x0; }
};

/// Decomposition of [lo, hi] into soft/stiff/defect pieces, split further at
/// interior profile breakpoints so each piece carries smooth coefficients.
std::vector<MediumPiece> medium_pieces(const MediumSpec& spec, double lo, double hi);

/// Exact integral of 1/a_eps over [s0, s1], which must lie inside `piece`.
double piece_inv_stiffness_integral(const MediumSpec& spec, const MediumPiece& piece, double s0,
                                    double s1);

/// Exact integral of rho_eps over [s0, s1] inside `piece`.
double piece_density_integral(const MediumSpec& spec, const MediumPiece& piece, double s0,
                              double s1);

/// Pointwise a_eps and rho_eps inside a piece (no interface lookups).
EpsCoefficients piece_coefficients(const MediumSpec& spec, const MediumPiece& piece, double x);

}  // namespace hc1d
