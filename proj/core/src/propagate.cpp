#include "hc1d/propagate.hpp"

#include <algorithm>
#include <cmath>

#include "hc1d/errors.hpp"

namespace hc1d {

namespace {

Eigen::Matrix2d constant_piece(double a, double rho, double lambda, double s) {
  Eigen::Matrix2d m;
  const double w2 = lambda * rho / a;
  if (w2 == 0.0) {
    m << 1.0, s / a, 0.0, 1.0;
  } else if (w2 > 0.0) {
    const double k = std::sqrt(w2);
    const double c = std::cos(k * s), sn = std::sin(k * s);
    m << c, sn / (a * k), -a * k * sn, c;
  } else {
    const double k = std::sqrt(-w2);
    const double c = std::cosh(k * s), sn = std::sinh(k * s);
    m << c, sn / (a * k), a * k * sn, c;
  }
  return m;
}

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

Eigen::Matrix2d adaptive_piece(const CoefficientProfile& a, const CoefficientProfile& rho,
                               double lambda, double x0, double x1, double tol) {
  auto rhs = [&](double x, const Eigen::Matrix2d& m) -> Eigen::Matrix2d {
    Eigen::Matrix2d d;
    const double inv_a = 1.0 / a(x);
    const double lr = lambda * rho(x);
    d.row(0) = inv_a * m.row(1);
    d.row(1) = -lr * m.row(0);
    return d;
  };

  Eigen::Matrix2d y = Eigen::Matrix2d::Identity();
  double x = x0;
  const double span = x1 - x0;
  double h = span / 16.0;
  const double h_min = span * 1e-14;
  Eigen::Matrix2d k1 = rhs(x, y);
  int guard = 0;
  while (x < x1) {
    if (++guard > 2000000) throw IntegrationError(x, "step limit exceeded");
    h = std::min(h, x1 - x);
    const Eigen::Matrix2d k2 = rhs(x + c2 * h, y + h * (a21 * k1));
    const Eigen::Matrix2d k3 = rhs(x + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Eigen::Matrix2d k4 = rhs(x + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Eigen::Matrix2d k5 =
        rhs(x + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Eigen::Matrix2d k6 =
        rhs(x + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Eigen::Matrix2d y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Eigen::Matrix2d k7 = rhs(x + h, y5);
    const Eigen::Matrix2d err_m =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
    const double err = err_m.cwiseAbs().maxCoeff() / (tol * scale);
    if (err <= 1.0) {
      x += h;
      y = y5;
      k1 = k7;  // first-same-as-last
    }
    const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    h *= factor;
    if (h < h_min && x < x1) throw IntegrationError(x, "step size underflow");
  }
  return y;
}

// atomic piece: constant coefficients get the closed form
Eigen::Matrix2d piece_matrix(const CoefficientProfile& a, const CoefficientProfile& rho,
                             double lambda, double x0, double x1, double tol) {
  const double ca = a.constant_on(x0, x1);
  const double cr = rho.constant_on(x0, x1);
  if (std::isfinite(ca) && std::isfinite(cr)) return constant_piece(ca, cr, lambda, x1 - x0);
  return adaptive_piece(a, rho, lambda, x0, x1, tol);
}

std::vector<double> merged_splits(const CoefficientProfile& a, const CoefficientProfile& rho,
                                  double lo, double hi) {
  std::vector<double> pts = a.breakpoints_in(lo, hi);
  for (double b : rho.breakpoints_in(lo, hi)) pts.push_back(b);
  pts.push_back(lo);
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](double p, double q) { return std::abs(p - q) < 1e-15 * (hi - lo); }),
            pts.end());
  return pts;
}

}  // namespace

PropagatorMatrix propagate(const CoefficientProfile& a, const CoefficientProfile& rho,
                           double lambda, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw ValidationError("tol", "tolerance must be positive");
  if (hi == lo) return {Eigen::Matrix2d::Identity(), lo, hi, lambda};
  if (hi < lo) {
    PropagatorMatrix fwd = propagate(a, rho, lambda, hi, lo, tol);
    return {unimodular_inverse(fwd.m), lo, hi, lambda};
  }
  const std::vector<double> pts = merged_splits(a, rho, lo, hi);
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    m = piece_matrix(a, rho, lambda, pts[i], pts[i + 1], tol) * m;
  return {m, lo, hi, lambda};
}

std::vector<Eigen::Matrix2d> propagate_cumulative(const CoefficientProfile& a,
                                                  const CoefficientProfile& rho, double lambda,
                                                  double lo, const std::vector<double>& xs,
                                                  double tol) {
  std::vector<Eigen::Matrix2d> out;
  out.reserve(xs.size());
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  double x = lo;
  for (double target : xs) {
    if (target < x) throw ValidationError("xs", "sample points must be ascending from lo");
    if (target > x) m = propagate(a, rho, lambda, x, target, tol).m * m;
    x = target;
    out.push_back(m);
  }
  return out;
}

}  // namespace hc1d
