#include "hc1d/bands.hpp"

#include <algorithm>
#include <cmath>

#include "hc1d/errors.hpp"
#include "hc1d/transfer.hpp"

namespace hc1d {

namespace {

double bisect_crossing(const MediumSpec& spec, double level, double lo, double hi, double flo,
                       double tol) {
  // sign change of D - level certified on entry
  double fhi_sign = flo >= 0 ? -1.0 : 1.0;
  (void)fhi_sign;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = limit_discriminant(spec, mid) - level;
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int BandStructure::gap_index(double lambda) const {
  for (std::size_t k = 0; k < gaps.size(); ++k)
    if (gaps[k].contains(lambda)) return static_cast<int>(k);
  return -1;
}

bool BandStructure::in_band(double lambda) const {
  for (const Interval& b : bands)
    if (lambda >= b.lo && lambda <= b.hi) return true;
  return false;
}

BandStructure compute_bands(const MediumSpec& spec, double lambda_max, int grid_n,
                            double root_tol) {
  if (!(lambda_max > 0.0)) throw ValidationError("lambda_max", "must be positive");
  if (grid_n < 100) throw ValidationError("grid_n", "need at least 100 grid points");

  BandStructure out;
  out.lambda_max = lambda_max;
  out.root_tol = root_tol;

  std::vector<std::pair<double, double>> samples;
  samples.reserve(static_cast<std::size_t>(grid_n) + 1);
  for (int i = 0; i <= grid_n; ++i) {
    const double lam = lambda_max * static_cast<double>(i) / static_cast<double>(grid_n);
    samples.emplace_back(lam, limit_discriminant(spec, lam));
  }

  // Collect crossings of both levels, refining cells that hide a +2 and a -2
  // crossing at once (the classifier needs them separated).
  std::vector<double> edges;
  std::vector<std::pair<double, double>> queue;  // cells to scan, as (lo, hi)
  auto d_of = [&](double lam) { return limit_discriminant(spec, lam); };

  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    queue.emplace_back(samples[i].first, samples[i + 1].first);

  int rounds = 0;
  while (!queue.empty()) {
    std::vector<std::pair<double, double>> next;
    for (const auto& [lo, hi] : queue) {
      const double flo = d_of(lo), fhi = d_of(hi);
      const bool plus = (flo - 2.0 <= 0.0) != (fhi - 2.0 <= 0.0);
      const bool minus = (flo + 2.0 <= 0.0) != (fhi + 2.0 <= 0.0);
      if (plus && minus) {
        if (rounds >= 3)
          throw NumericError("band grid too coarse: +2 and -2 crossings share a cell");
        const int sub = 10;
        for (int k = 0; k < sub; ++k) {
          const double a = lo + (hi - lo) * k / sub;
          const double b = lo + (hi - lo) * (k + 1) / sub;
          next.emplace_back(a, b);
        }
        continue;
      }
      if (plus) edges.push_back(bisect_crossing(spec, 2.0, lo, hi, flo - 2.0, root_tol));
      if (minus) edges.push_back(bisect_crossing(spec, -2.0, lo, hi, flo + 2.0, root_tol));
    }
    if (!next.empty()) ++rounds;
    queue = std::move(next);
  }
  out.refinement_rounds = rounds;

  // lambda = 0 always satisfies D = 2 and opens the first band
  edges.push_back(0.0);
  edges.push_back(lambda_max);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [&](double a, double b) { return b - a < 2.0 * root_tol; }),
              edges.end());

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double mid = 0.5 * (edges[i] + edges[i + 1]);
    const bool band = std::abs(d_of(mid)) <= 2.0;
    if (band) {
      if (!out.bands.empty() && std::abs(out.bands.back().hi - edges[i]) < 2.0 * root_tol)
        out.bands.back().hi = edges[i + 1];  // merge touching pieces
      else
        out.bands.push_back({edges[i], edges[i + 1]});
    }
  }
  for (std::size_t k = 0; k + 1 < out.bands.size(); ++k)
    out.gaps.push_back({out.bands[k].hi, out.bands[k + 1].lo});
  if (!out.bands.empty() && out.bands.back().hi < lambda_max - 2.0 * root_tol)
    out.gaps.push_back({out.bands.back().hi, lambda_max});

  out.samples = std::move(samples);
  return out;
}

BandFunction band_function(const MediumSpec& spec, const BandStructure& bands, int n,
                           const std::vector<double>& theta_grid) {
  if (n < 1 || n > static_cast<int>(bands.bands.size()))
    throw RangeError("band index outside the computed band structure");
  const Interval band = bands.bands[static_cast<std::size_t>(n - 1)];

  BandFunction out;
  out.n = n;
  out.theta = theta_grid;
  out.lambda.reserve(theta_grid.size());
  const double pad = 4.0 * bands.root_tol;
  for (double theta : theta_grid) {
    const double target = 2.0 * std::cos(theta);
    double lo = std::max(0.0, band.lo - pad);
    double hi = band.hi + pad;
    double flo = limit_discriminant(spec, lo) - target;
    double fhi = limit_discriminant(spec, hi) - target;
    if ((flo <= 0.0) == (fhi <= 0.0)) {
      // roots at theta in {0, pi} sit exactly on a band edge, where the
      // bracket cannot change sign; accept a residual consistent with the
      // edge bisection tolerance
      const double slope = std::abs(fhi - flo) / std::max(hi - lo, 1e-300);
      const double edge_tol = 1e3 * bands.root_tol * std::max(1.0, slope);
      if (std::abs(flo) <= edge_tol || std::abs(fhi) <= edge_tol) {
        out.lambda.push_back(std::abs(flo) <= std::abs(fhi) ? band.lo : band.hi);
        continue;
      }
      throw InconsistencyError(
          "no dispersion root in band bracket; discriminant is not monotone across band " +
          std::to_string(n));
    }
    while (hi - lo > bands.root_tol) {
      const double mid = 0.5 * (lo + hi);
      const double fm = limit_discriminant(spec, mid) - target;
      if ((flo <= 0.0) == (fm <= 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    out.lambda.push_back(std::clamp(0.5 * (lo + hi), band.lo, band.hi));
  }
  return out;
}

BandFunction band_function(const MediumSpec& spec, int n, const std::vector<double>& theta_grid) {
  double lambda_max = 200.0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const BandStructure bands = compute_bands(spec, lambda_max);
    if (n <= static_cast<int>(bands.bands.size())) return band_function(spec, bands, n, theta_grid);
    lambda_max *= 4.0;
  }
  throw RangeError("band index not reachable within the search window");
}

std::vector<double> default_theta_grid(int count) {
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    g[static_cast<std::size_t>(i)] = M_PI * static_cast<double>(i) / static_cast<double>(count - 1);
  return g;
}

}  // namespace hc1d
