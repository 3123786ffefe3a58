#pragma once

#include <vector>

#include "hc1d/errors.hpp"
#include "hc1d/medium.hpp"

namespace hc1d {

/// Requested spectral parameter sits on (or too close to) an eigenvalue of
/// the soft-cell problem, where the series has a pole.
class PoleProximityError : public Error {
 public:
  using Error::Error;
};

/// Eigenpairs of the quasiperiodic soft-cell problem
/// -(a0 u')' = mu rho0 u on (0, h), u(h) = e^{i theta} u(0) with matching
/// co-derivative phase, reduced to the data the spectral series needs:
/// eigenvalues and |Phi_n(0)|^2 for the rho0-normalised eigenfunctions.
struct SoftCellBasis {
  double theta;
  std::vector<double> mu;
  std::vector<double> phi0_sq;
  double rho1_integral;
};

/// Discretizes the soft cell with the conservative three-point scheme on a
/// ring (quasiperiodic wrap) and extracts the lowest n_terms eigenpairs by
/// Sturm bisection plus inverse iteration; degenerate pairs (theta = 0, pi)
/// are resolved as orthonormal clusters so |Phi(0)|^2 sums stay basis-free.
SoftCellBasis soft_cell_basis(const MediumSpec& spec, double theta, int n_terms,
                              int mesh_n = 4096);

/// Truncated spectral series minus the stiff mass threshold:
///   sum_n lambda / (mu_n - lambda) |Phi_n(0)|^2  -  1 / int_{Y1} rho1.
/// A root in theta for fixed lambda certifies that lambda belongs to the
/// limit spectrum. Throws PoleProximityError when lambda is within 1e-8 of
/// a used eigenvalue.
double series_criterion_value(const SoftCellBasis& basis, double lambda);

/// Convenience wrapper building the basis on the fly.
double spectral_series_criterion(const MediumSpec& spec, double lambda, double theta, int n_terms,
                                 int mesh_n = 4096);

/// Band/gap classification by the series criterion alone. The criterion has
/// poles in theta wherever a soft-cell eigenvalue curve mu_n(theta) crosses
/// lambda, and a simple pole flips the sign without a root; a sign change
/// therefore certifies a root only on a pole-free theta cell. Cells where a
/// pole and a sign change coincide are subdivided (new bases are computed
/// lazily and cached).
class SeriesClassifier {
 public:
  SeriesClassifier(const MediumSpec& spec, int n_terms = 250, int mesh_n = 2048,
                   int theta_count = 33);

  /// True when some pole-free theta cell shows a certified sign change.
  bool in_band(double lambda) const;

  const SoftCellBasis& basis_at(double theta) const;

 private:
  bool scan(double ta, double tb, double lambda, int depth) const;

  MediumSpec spec_;
  int n_terms_;
  int mesh_n_;
  std::vector<double> theta_grid_;
  mutable std::vector<std::pair<double, SoftCellBasis>> cache_;
};

}  // namespace hc1d
