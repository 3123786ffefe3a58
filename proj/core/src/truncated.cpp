#include "hc1d/truncated.hpp"

#include <algorithm>
#include <cmath>

#include "hc1d/errors.hpp"
#include "hc1d/lattice.hpp"

namespace hc1d {

double default_half_width(const MediumSpec& spec, double nu_star) {
  double dmax = 0.0;
  if (spec.defect)
    dmax = std::max(std::abs(spec.defect->d_minus), std::abs(spec.defect->d_plus));
  return dmax + 20.0 * spec.epsilon / std::max(nu_star, 1e-3) + 2.0;
}

FdPencil discretize(const TruncatedProblem& prob) {
  const MediumSpec& spec = prob.spec;
  if (prob.nodes_per_cell < 32)
    throw ValidationError("nodes_per_cell", "need at least 32 nodes per cell");
  const double x_lo = prob.center - prob.half_width;
  const double x_hi = prob.center + prob.half_width;

  const std::vector<MediumPiece> pieces = medium_pieces(spec, x_lo, x_hi);
  const double target = spec.epsilon / static_cast<double>(prob.nodes_per_cell);

  // grid: every piece boundary is a node; pieces are chopped to ~target
  std::vector<double> nodes;
  std::vector<const MediumPiece*> seg_piece;  // piece owning segment i..i+1
  nodes.push_back(x_lo);
  for (const MediumPiece& p : pieces) {
    const int sub = std::max(1, static_cast<int>(std::ceil(p.length() / target)));
    for (int k = 1; k <= sub; ++k) {
      nodes.push_back(k == sub ? p.x1 : p.x0 + p.length() * k / sub);
      seg_piece.push_back(&p);
    }
  }

  const std::size_t n_nodes = nodes.size();
  const std::size_t n = n_nodes - 2;  // Dirichlet: interior unknowns only
  if (n < 3) throw ValidationError("half_width", "window too small for the grid");

  // segment quantities
  std::vector<double> w(n_nodes - 1);    // harmonic flux weight 1 / int(1/a)
  std::vector<double> mseg(n_nodes - 1);  // int(rho) over the segment
  for (std::size_t i = 0; i + 1 < n_nodes; ++i) {
    w[i] = 1.0 / piece_inv_stiffness_integral(spec, *seg_piece[i], nodes[i], nodes[i + 1]);
    mseg[i] = piece_density_integral(spec, *seg_piece[i], nodes[i], nodes[i + 1]);
  }

  FdPencil fd;
  fd.x.assign(nodes.begin() + 1, nodes.end() - 1);
  fd.x_lo = x_lo;
  fd.x_hi = x_hi;
  fd.k.diag.resize(static_cast<long>(n));
  fd.k.off.resize(static_cast<long>(n - 1));
  fd.m.diag.resize(static_cast<long>(n));
  fd.m.off = Eigen::VectorXd::Zero(static_cast<long>(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    fd.k.diag[static_cast<long>(i)] = w[i] + w[i + 1];
    fd.m.diag[static_cast<long>(i)] = 0.5 * (mseg[i] + mseg[i + 1]);
    if (i + 1 < n) fd.k.off[static_cast<long>(i)] = -w[i + 1];
  }
  return fd;
}

double mass_fraction_outside(const FdPencil& fd, const Eigen::VectorXd& u, double a, double b,
                             double margin) {
  double total = 0.0, outside = 0.0;
  for (long i = 0; i < u.size(); ++i) {
    const double cell = fd.m.diag[i] * u[i] * u[i];
    total += cell;
    const double x = fd.x[static_cast<std::size_t>(i)];
    const double dist = x < a ? a - x : (x > b ? x - b : 0.0);
    if (dist > margin) outside += cell;
  }
  return outside / total;
}

std::vector<GapEigenpair> gap_eigenpairs(const TruncatedProblem& prob, double gap_lo,
                                         double gap_hi, double bisect_tol) {
  return gap_eigenpairs(discretize(prob), gap_lo, gap_hi, bisect_tol);
}

std::vector<GapEigenpair> gap_eigenpairs(const FdPencil& fd, double gap_lo, double gap_hi,
                                         double bisect_tol) {
  const std::vector<double> lambdas =
      pencil_eigenvalues_in(fd.k, fd.m, gap_lo, gap_hi, bisect_tol);

  std::vector<GapEigenpair> out;
  std::vector<Eigen::VectorXd> cluster;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double lam = lambdas[i];
    const bool new_cluster =
        out.empty() || lam - out.back().lambda > 1e-7 * std::max(1.0, std::abs(lam));
    if (new_cluster) cluster.clear();

    Eigen::VectorXd u;
    bool ok = false;
    for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
      try {
        const double jitter = attempt == 0 ? 0.0 : attempt * 1e-9 * std::max(1.0, std::abs(lam));
        u = pencil_inverse_iteration(fd.k, fd.m, lam + jitter, cluster, 12345 + attempt);
        ok = true;
      } catch (const NumericError&) {
      }
    }
    if (!ok) throw NumericError("inverse iteration failed after 5 shifted attempts");
    cluster.push_back(u);

    GapEigenpair pair;
    pair.lambda = lam;
    pair.u = u;
    const Eigen::VectorXd mu = fd.m.multiply(u);
    pair.residual = (fd.k.multiply(u) - lam * mu).norm() / mu.norm();
    const double quarter = 0.25 * (fd.x_hi - fd.x_lo) / 2.0;
    double outer = 0.0, total = 0.0;
    for (long j = 0; j < u.size(); ++j) {
      const double cell = fd.m.diag[j] * u[j] * u[j];
      total += cell;
      const double x = fd.x[static_cast<std::size_t>(j)];
      if (x - fd.x_lo < quarter || fd.x_hi - x < quarter) outer += cell;
    }
    pair.boundary_mass_fraction = outer / total;
    pair.flagged = pair.boundary_mass_fraction > 1e-6;
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace hc1d
