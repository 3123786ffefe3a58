#include "hc1d/neumann.hpp"

#include <algorithm>
#include <cmath>

#include "hc1d/errors.hpp"
#include "hc1d/propagate.hpp"

namespace hc1d {

namespace {

// integration nodes: per smooth piece, `per_piece` two-point Gauss cells
struct QuadGrid {
  std::vector<double> points;   // ascending, Gauss nodes
  std::vector<double> weights;  // matching weights
};

QuadGrid defect_quadrature(const DefectSpec& defect, int cells_total) {
  std::vector<double> cuts{defect.d_minus, defect.d_plus};
  for (double b : defect.a.breakpoints_in(defect.d_minus, defect.d_plus)) cuts.push_back(b);
  for (double b : defect.rho.breakpoints_in(defect.d_minus, defect.d_plus)) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double total = defect.d_plus - defect.d_minus;
  QuadGrid g;
  const double off = 0.5 / std::sqrt(3.0);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    const int n = std::max(2, static_cast<int>(std::lround(cells_total * len / total)));
    for (int k = 0; k < n; ++k) {
      const double a = cuts[i] + len * k / n;
      const double w = len / n;
      g.points.push_back(a + w * (0.5 - off));
      g.points.push_back(a + w * (0.5 + off));
      g.weights.push_back(w / 2.0);
      g.weights.push_back(w / 2.0);
    }
  }
  return g;
}

NeumannMode build_mode(const DefectSpec& defect, double lambda, int index, double residual) {
  NeumannMode mode;
  mode.lambda0 = lambda;
  mode.index = index;
  mode.end_flux_residual = residual;

  // normalisation via Gauss quadrature on the propagated state
  const QuadGrid quad = defect_quadrature(defect, 1200);
  const auto mats =
      propagate_cumulative(defect.a, defect.rho, lambda, defect.d_minus, quad.points);
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < quad.points.size(); ++i) {
    const double u = mats[i](0, 0);  // first column: Cauchy data (1, 0)
    norm_sq += quad.weights[i] * defect.rho(quad.points[i]) * u * u;
  }
  const double scale = 1.0 / std::sqrt(norm_sq);

  // display samples on a uniform grid (piece cuts included)
  std::vector<double> xs;
  const int n_samples = 800;
  for (int i = 0; i <= n_samples; ++i)
    xs.push_back(defect.d_minus + (defect.d_plus - defect.d_minus) * i / n_samples);
  for (double b : defect.a.breakpoints_in(defect.d_minus, defect.d_plus)) xs.push_back(b);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const auto sample_mats = propagate_cumulative(defect.a, defect.rho, lambda, defect.d_minus, xs);
  mode.x = xs;
  mode.u.reserve(xs.size());
  mode.flux.reserve(xs.size());
  for (const auto& m : sample_mats) {
    mode.u.push_back(scale * m(0, 0));
    mode.flux.push_back(scale * m(1, 0));
  }
  return mode;
}

}  // namespace

double neumann_shooting_function(const DefectSpec& defect, double lambda) {
  return propagate(defect.a, defect.rho, lambda, defect.d_minus, defect.d_plus).m(1, 0);
}

std::vector<NeumannMode> neumann_modes(const DefectSpec& defect, int n_max, double shoot_tol) {
  std::vector<NeumannMode> out;
  out.push_back(build_mode(defect, 0.0, 0, 0.0));  // constants: exact kernel mode
  if (n_max < 1) return out;

  const double len = defect.d_plus - defect.d_minus;
  const double speed = defect.a.max_value() / defect.rho.min_value();
  double lambda_hi =
      2.0 * speed * std::pow((n_max + 1) * M_PI / len, 2.0);

  int grid_n = 64 * (n_max + 1);
  for (int round = 0; round < 6; ++round) {
    std::vector<std::pair<double, double>> brackets;
    double prev_l = 0.0;
    double prev_f = neumann_shooting_function(defect, prev_l);
    for (int i = 1; i <= grid_n && static_cast<int>(brackets.size()) < n_max; ++i) {
      const double l = lambda_hi * i / grid_n;
      const double f = neumann_shooting_function(defect, l);
      if ((prev_f <= 0.0) != (f <= 0.0)) brackets.emplace_back(prev_l, l);
      prev_l = l;
      prev_f = f;
    }
    // F has a root at 0 (constants). The grid starts past it, but an extra
    // crossing right at the start would mean the first bracket is stale.
    if (static_cast<int>(brackets.size()) >= n_max) {
      int index = 1;
      for (auto [lo, hi] : brackets) {
        double flo = neumann_shooting_function(defect, lo);
        while (hi - lo > shoot_tol * std::max(1.0, hi)) {
          const double mid = 0.5 * (lo + hi);
          const double fm = neumann_shooting_function(defect, mid);
          if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        const double lambda = 0.5 * (lo + hi);
        out.push_back(
            build_mode(defect, lambda, index++, std::abs(neumann_shooting_function(defect, lambda))));
      }
      return out;
    }
    grid_n *= 4;  // missed roots: refine the scan grid
  }
  throw NumericError("neumann_modes: could not bracket the requested number of roots");
}

std::vector<GapMode> gap_filter(const std::vector<NeumannMode>& modes,
                                const BandStructure& bands) {
  std::vector<GapMode> out;
  for (const NeumannMode& m : modes) {
    if (m.lambda0 > bands.lambda_max)
      throw RangeError("Neumann mode above the computed band-structure range");
    const int g = bands.gap_index(m.lambda0);
    if (g < 0) continue;
    const Interval& gap = bands.gaps[static_cast<std::size_t>(g)];
    out.push_back({m, g, std::min(m.lambda0 - gap.lo, gap.hi - m.lambda0)});
  }
  return out;
}

}  // namespace hc1d
