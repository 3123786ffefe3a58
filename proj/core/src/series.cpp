#include "hc1d/series.hpp"

#include <cmath>
#include <complex>

#include "hc1d/tridiag.hpp"

namespace hc1d {

SoftCellBasis soft_cell_basis(const MediumSpec& spec, double theta, int n_terms, int mesh_n) {
  if (n_terms < 10) throw ValidationError("n_terms", "need at least 10 series terms");
  const double h = spec.geometry.h;
  const int n = mesh_n;
  const double dx = h / static_cast<double>(n);
  const std::complex<double> phase(std::cos(theta), std::sin(theta));

  // ring discretization: node i at i*dx, node n wraps to phase * node 0
  CyclicHermTridiag K, M;
  K.diag.setZero(n);
  K.off.setZero(n - 1);
  M.diag.setZero(n);
  M.off.setZero(n - 1);
  auto node = [&](int i) { return dx * static_cast<double>(i); };
  std::vector<double> w(static_cast<std::size_t>(n)), mseg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = 1.0 / spec.a0.inverse_integral(node(i), node(i + 1));
    mseg[static_cast<std::size_t>(i)] = spec.rho0.integral(node(i), node(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    const double wl = w[static_cast<std::size_t>((i + n - 1) % n)];
    const double wr = w[static_cast<std::size_t>(i)];
    K.diag[i] = wl + wr;
    M.diag[i] = 0.5 * (mseg[static_cast<std::size_t>((i + n - 1) % n)] +
                       mseg[static_cast<std::size_t>(i)]);
    if (i + 1 < n) K.off[i] = -wr;
  }
  // wrap segment couples node n-1 to phase * node 0
  K.corner = -w[static_cast<std::size_t>(n - 1)] * std::conj(phase);

  SoftCellBasis basis;
  basis.theta = theta;
  basis.rho1_integral = spec.stiff_rho_integral();
  basis.mu = pencil_eigenvalues_by_index(K, M, 1, n_terms, 1e-11);
  basis.phi0_sq.reserve(basis.mu.size());

  std::vector<Eigen::VectorXcd> cluster;
  for (std::size_t i = 0; i < basis.mu.size(); ++i) {
    const bool same_cluster =
        i > 0 && basis.mu[i] - basis.mu[i - 1] < 1e-7 * std::max(1.0, std::abs(basis.mu[i]));
    if (!same_cluster) cluster.clear();
    Eigen::VectorXcd u = pencil_inverse_iteration(K, M, basis.mu[i], cluster, 777 + (unsigned)i);
    cluster.push_back(u);
    basis.phi0_sq.push_back(std::norm(u[0]));
  }
  return basis;
}

double series_criterion_value(const SoftCellBasis& basis, double lambda) {
  double sum = 0.0;
  for (std::size_t i = 0; i < basis.mu.size(); ++i) {
    if (std::abs(basis.mu[i] - lambda) < 1e-8)
      throw PoleProximityError("lambda within 1e-8 of a soft-cell eigenvalue");
    sum += lambda / (basis.mu[i] - lambda) * basis.phi0_sq[i];
  }
  return sum - 1.0 / basis.rho1_integral;
}

double spectral_series_criterion(const MediumSpec& spec, double lambda, double theta, int n_terms,
                                 int mesh_n) {
  return series_criterion_value(soft_cell_basis(spec, theta, n_terms, mesh_n), lambda);
}

SeriesClassifier::SeriesClassifier(const MediumSpec& spec, int n_terms, int mesh_n,
                                   int theta_count)
    : spec_(spec), n_terms_(n_terms), mesh_n_(mesh_n) {
  for (int i = 0; i < theta_count; ++i)
    theta_grid_.push_back(M_PI * static_cast<double>(i) / static_cast<double>(theta_count - 1));
}

const SoftCellBasis& SeriesClassifier::basis_at(double theta) const {
  for (const auto& [t, b] : cache_)
    if (std::abs(t - theta) < 1e-14) return b;
  cache_.emplace_back(theta, soft_cell_basis(spec_, theta, n_terms_, mesh_n_));
  return cache_.back().second;
}

namespace {

// A cell [a, b] is treated as pole-free only when every eigenvalue curve is
// farther from lambda at both ends than its own movement across the cell
// (plus a noise floor covering the bisection tolerance of the mu's). This is
// conservative: a pole sitting on or next to a cell endpoint makes the cell
// suspicious rather than silently certified.
bool provably_pole_free(const SoftCellBasis& a, const SoftCellBasis& b, double lambda) {
  const std::size_t n = std::min(a.mu.size(), b.mu.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double guard = std::abs(a.mu[i] - b.mu[i]) + 1e-8 * (1.0 + std::abs(lambda));
    if (std::abs(a.mu[i] - lambda) <= guard || std::abs(b.mu[i] - lambda) <= guard) return false;
  }
  return true;
}

}  // namespace

bool SeriesClassifier::scan(double ta, double tb, double lambda, int depth) const {
  const SoftCellBasis& ba = basis_at(ta);
  const SoftCellBasis& bb = basis_at(tb);
  const bool sign_change = (series_criterion_value(ba, lambda) <= 0.0) !=
                           (series_criterion_value(bb, lambda) <= 0.0);
  if (provably_pole_free(ba, bb, lambda)) return sign_change;
  if (depth >= 9) return false;  // pole-dominated sliver, no certified root
  const double tm = 0.5 * (ta + tb);
  return scan(ta, tm, lambda, depth + 1) || scan(tm, tb, lambda, depth + 1);
}

bool SeriesClassifier::in_band(double lambda) const {
  for (std::size_t i = 0; i + 1 < theta_grid_.size(); ++i)
    if (scan(theta_grid_[i], theta_grid_[i + 1], lambda, 0)) return true;
  return false;
}

}  // namespace hc1d
