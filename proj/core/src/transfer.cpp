#include "hc1d/transfer.hpp"

#include <algorithm>
#include <cmath>

#include "hc1d/errors.hpp"

namespace hc1d {

namespace {

Eigen::Matrix2d flux_scaling(double s) {
  Eigen::Matrix2d m;
  m << 1.0, 0.0, 0.0, s;
  return m;
}

}  // namespace

TransferMatrix transfer_matrix(const MediumSpec& spec, double lambda, double tol) {
  const double h = spec.geometry.h;
  const double eps = spec.epsilon;
  const Eigen::Matrix2d p0 = propagate(spec.a0, spec.rho0, lambda, 0.0, h, tol).m;
  const Eigen::Matrix2d p1 = propagate(spec.a1, spec.rho1, eps * eps * lambda, h, 1.0, tol).m;
  const Eigen::Matrix2d m =
      flux_scaling(1.0 / (eps * eps)) * p1 * flux_scaling(eps * eps) * p0;
  TransferMatrix t;
  t.m = m;
  t.h_eps = m.trace();
  std::tie(t.mu1, t.mu2) = floquet_multipliers(t.h_eps);
  t.epsilon = eps;
  t.lambda = lambda;
  return t;
}

double limit_discriminant(const MediumSpec& spec, double lambda, double tol) {
  const double h = spec.geometry.h;
  const Eigen::Matrix2d p0 = propagate(spec.a0, spec.rho0, lambda, 0.0, h, tol).m;
  return p0(0, 0) + p0(1, 1) - lambda * p0(0, 1) * spec.stiff_rho_integral();
}

Eigen::Matrix2d limit_monodromy(const MediumSpec& spec, double lambda, double tol) {
  const double h = spec.geometry.h;
  const Eigen::Matrix2d p0 = propagate(spec.a0, spec.rho0, lambda, 0.0, h, tol).m;
  Eigen::Matrix2d jump;
  jump << 1.0, 0.0, -lambda * spec.stiff_rho_integral(), 1.0;
  return jump * p0;
}

double decay_root(double disc) {
  if (!(std::abs(disc) > 2.0)) throw NotInGapError("|discriminant| <= 2: not in a gap");
  const double s = disc >= 0.0 ? 1.0 : -1.0;
  return (disc - s * std::sqrt(disc * disc - 4.0)) / 2.0;
}

std::pair<std::complex<double>, std::complex<double>> floquet_multipliers(double trace) {
  if (std::abs(trace) > 2.0) {
    const double mu1 = decay_root(trace);
    return {std::complex<double>(mu1, 0.0), std::complex<double>(1.0 / mu1, 0.0)};
  }
  const double im = std::sqrt(std::max(0.0, 4.0 - trace * trace)) / 2.0;
  const std::complex<double> mu1(trace / 2.0, -im);
  return {mu1, std::conj(mu1)};
}

Eigen::Vector2d floquet_eigenvector(const Eigen::Matrix2d& t, double mu, bool use_first_row) {
  const double scale = t.cwiseAbs().maxCoeff() + std::abs(mu);
  Eigen::Vector2d primary, fallback;
  primary << t(0, 1), mu - t(0, 0);
  fallback << mu - t(1, 1), t(1, 0);
  if (!use_first_row) std::swap(primary, fallback);
  if (primary.norm() > 1e-13 * scale) return primary;
  if (fallback.norm() > 1e-13 * scale) return fallback;
  throw NumericError("degenerate Floquet eigenvector");
}

std::vector<double> lattice_walls(const MediumSpec& spec, double x0, double x1) {
  const double eps = spec.epsilon;
  const double h = spec.geometry.h;
  std::vector<double> walls;
  const long z0 = static_cast<long>(std::floor(x0 / eps)) - 1;
  const long z1 = static_cast<long>(std::ceil(x1 / eps)) + 1;
  const double snap = 1e-13 * eps;
  for (long z = z0; z <= z1; ++z) {
    for (double w : {eps * static_cast<double>(z), eps * (static_cast<double>(z) + h)}) {
      if (w > x0 + snap && w < x1 - snap) walls.push_back(w);
    }
  }
  std::sort(walls.begin(), walls.end());
  return walls;
}

namespace {

// Propagator across a physical interval [p, q] contained in one soft or
// stiff lattice piece, via the cell-coordinate problem conjugated by the
// co-derivative scaling (soft flux = eps * cell flux, stiff = cell/eps).
Eigen::Matrix2d lattice_piece(const MediumSpec& spec, double lambda, double p, double q,
                              double tol) {
  const double eps = spec.epsilon;
  const double h = spec.geometry.h;
  const double mid = 0.5 * (p + q);
  const double zc = std::floor(mid / eps);
  double y0 = p / eps - zc;
  double y1 = q / eps - zc;
  const double ymid = mid / eps - zc;
  if (ymid < h) {
    y0 = std::clamp(y0, 0.0, h);
    y1 = std::clamp(y1, 0.0, h);
    const Eigen::Matrix2d pc = propagate(spec.a0, spec.rho0, lambda, y0, y1, tol).m;
    return flux_scaling(eps) * pc * flux_scaling(1.0 / eps);
  }
  y0 = std::clamp(y0, h, 1.0);
  y1 = std::clamp(y1, h, 1.0);
  const Eigen::Matrix2d pc =
      propagate(spec.a1, spec.rho1, eps * eps * lambda, y0, y1, tol).m;
  return flux_scaling(1.0 / eps) * pc * flux_scaling(eps);
}

}  // namespace

Eigen::Matrix2d propagate_periodic_physical(const MediumSpec& spec, double lambda, double x0,
                                            double x1, double tol) {
  if (x0 == x1) return Eigen::Matrix2d::Identity();
  if (x1 < x0) return unimodular_inverse(propagate_periodic_physical(spec, lambda, x1, x0, tol));
  std::vector<double> pts = lattice_walls(spec, x0, x1);
  pts.insert(pts.begin(), x0);
  pts.push_back(x1);
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    m = lattice_piece(spec, lambda, pts[i], pts[i + 1], tol) * m;
  return m;
}

std::vector<PropState> periodic_physical_states(const MediumSpec& spec, double lambda, double x0,
                                                PropState s0, const std::vector<double>& xs,
                                                double tol) {
  std::vector<PropState> out;
  out.reserve(xs.size());
  PropState s = s0;
  double x = x0;
  for (double target : xs) {
    s = apply(propagate_periodic_physical(spec, lambda, x, target, tol), s);
    x = target;
    out.push_back(s);
  }
  return out;
}

}  // namespace hc1d
