#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hc1d/errors.hpp"

namespace hc1d {

/// Hermitian tridiagonal matrix with an optional wrap-around corner entry,
/// the structure produced by three-point schemes and P1 elements on a chain
/// (corner == 0) or on a ring with quasiperiodic coupling (corner != 0).
/// `diag` is the real diagonal, `off[i]` is the entry (i, i+1), and `corner`
/// is the entry (0, n-1); the conjugate transposed entries are implied.
template <typename Scalar>
struct HermTridiag {
  Eigen::VectorXd diag;
  Eigen::Vector<Scalar, Eigen::Dynamic> off;
  Scalar corner{};

  int size() const { return static_cast<int>(diag.size()); }

  bool has_corner() const {
    if constexpr (std::is_same_v<Scalar, double>)
      return corner != 0.0;
    else
      return corner != Scalar{};
  }

  Eigen::Vector<Scalar, Eigen::Dynamic> multiply(
      const Eigen::Vector<Scalar, Eigen::Dynamic>& x) const {
    const int n = size();
    Eigen::Vector<Scalar, Eigen::Dynamic> y(n);
    for (int i = 0; i < n; ++i) {
      Scalar acc = Scalar(diag[i]) * x[i];
      if (i + 1 < n) acc += off[i] * x[i + 1];
      if (i > 0) acc += conj_of(off[i - 1]) * x[i - 1];
      y[i] = acc;
    }
    if (has_corner()) {
      y[0] += corner * x[n - 1];
      y[n - 1] += conj_of(corner) * x[0];
    }
    return y;
  }

  static Scalar conj_of(Scalar v) {
    if constexpr (std::is_same_v<Scalar, double>)
      return v;
    else
      return std::conj(v);
  }
};

using RealSymTridiag = HermTridiag<double>;
using CyclicHermTridiag = HermTridiag<std::complex<double>>;

namespace detail {

/// LU factorization with partial pivoting of a general tridiagonal matrix
/// (the classic gttrf/gttrs pair). Near-zero pivots are nudged so that
/// inverse iteration close to an eigenvalue stays finite.
template <typename Scalar>
class TridiagPLU {
 public:
  void factor(Eigen::Vector<Scalar, Eigen::Dynamic> dl, Eigen::Vector<Scalar, Eigen::Dynamic> d,
              Eigen::Vector<Scalar, Eigen::Dynamic> du, double pivot_floor) {
    dl_ = std::move(dl);
    d_ = std::move(d);
    du_ = std::move(du);
    const int n = static_cast<int>(d_.size());
    du2_.setZero(std::max(0, n - 2));
    swap_.assign(std::max(0, n - 1), false);
    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (std::abs(d_[i]) < pivot_floor) d_[i] = Scalar(pivot_floor);
        const Scalar fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        swap_[i] = true;
        const Scalar fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const Scalar tmp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = tmp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
      }
    }
    if (n > 0 && std::abs(d_[n - 1]) < pivot_floor) d_[n - 1] = Scalar(pivot_floor);
  }

  void solve_in_place(Eigen::Vector<Scalar, Eigen::Dynamic>& b) const {
    const int n = static_cast<int>(d_.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (!swap_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const Scalar tmp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = tmp - dl_[i] * b[i];
      }
    }
    if (n == 0) return;
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (int i = n - 3; i >= 0; --i)
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
  }

 private:
  Eigen::Vector<Scalar, Eigen::Dynamic> dl_, d_, du_, du2_;
  std::vector<bool> swap_;
};

}  // namespace detail

/// Shifted system (K - shift*M) x = rhs for Hermitian tridiagonal pencils,
/// factored once and solved repeatedly. The wrap-around corner is handled by
/// ordering node 0 last and eliminating it through a Schur complement.
template <typename Scalar>
class ShiftedPencilSolver {
 public:
  using Vec = Eigen::Vector<Scalar, Eigen::Dynamic>;

  ShiftedPencilSolver(const HermTridiag<Scalar>& K, const HermTridiag<Scalar>& M, double shift) {
    const int n = K.size();
    n_ = n;
    cyclic_ = K.has_corner() || M.has_corner();
    if (cyclic_ && n < 3) throw NumericError("ring pencil too small");
    const double scale = K.diag.cwiseAbs().maxCoeff() + std::abs(shift) * M.diag.cwiseAbs().maxCoeff();
    const double floor = std::max(scale, 1.0) * 1e-30;

    auto shifted_diag = [&](int i) { return Scalar(K.diag[i] - shift * M.diag[i]); };
    auto shifted_off = [&](int i) { return K.off[i] - Scalar(shift) * M.off[i]; };

    if (!cyclic_) {
      Vec dl(n - 1), d(n), du(n - 1);
      for (int i = 0; i < n; ++i) d[i] = shifted_diag(i);
      for (int i = 0; i + 1 < n; ++i) {
        du[i] = shifted_off(i);
        dl[i] = HermTridiag<Scalar>::conj_of(shifted_off(i));
      }
      plu_.factor(std::move(dl), std::move(d), std::move(du), floor);
      return;
    }

    // chain = nodes 1..n-1, border = node 0
    const int m = n - 1;
    Vec dl(m - 1), d(m), du(m - 1);
    for (int i = 0; i < m; ++i) d[i] = shifted_diag(i + 1);
    for (int i = 0; i + 1 < m; ++i) {
      du[i] = shifted_off(i + 1);
      dl[i] = HermTridiag<Scalar>::conj_of(shifted_off(i + 1));
    }
    plu_.factor(std::move(dl), std::move(d), std::move(du), floor);

    border_ = Vec::Zero(m);
    border_[0] = HermTridiag<Scalar>::conj_of(shifted_off(0));
    const Scalar corner = K.corner - Scalar(shift) * M.corner;
    border_[m - 1] = HermTridiag<Scalar>::conj_of(corner);
    alpha_ = shifted_diag(0);

    y_ = border_;
    plu_.solve_in_place(y_);
    Scalar s = alpha_;
    for (int i = 0; i < m; ++i) s -= HermTridiag<Scalar>::conj_of(border_[i]) * y_[i];
    if (std::abs(s) < floor) s = Scalar(floor);
    schur_ = s;
  }

  Vec solve(const Vec& rhs) const {
    if (!cyclic_) {
      Vec x = rhs;
      plu_.solve_in_place(x);
      return x;
    }
    const int m = n_ - 1;
    Vec z = rhs.segment(1, m);
    plu_.solve_in_place(z);
    Scalar dot{};
    for (int i = 0; i < m; ++i) dot += HermTridiag<Scalar>::conj_of(border_[i]) * z[i];
    const Scalar x0 = (rhs[0] - dot) / schur_;
    Vec x(n_);
    x[0] = x0;
    x.segment(1, m) = z - y_ * x0;
    return x;
  }

 private:
  int n_ = 0;
  bool cyclic_ = false;
  detail::TridiagPLU<Scalar> plu_;
  Eigen::Vector<Scalar, Eigen::Dynamic> border_, y_;
  Scalar alpha_{}, schur_{};
};

/// Number of eigenvalues of the pencil (K, M) strictly below `lambda`,
/// computed from the inertia of K - lambda*M via an LDL^H sweep (Sturm count).
/// M must be positive definite.
template <typename Scalar>
int pencil_count_below(const HermTridiag<Scalar>& K, const HermTridiag<Scalar>& M, double lambda) {
  const int n = K.size();
  const double scale =
      K.diag.cwiseAbs().maxCoeff() + std::abs(lambda) * M.diag.cwiseAbs().maxCoeff();
  const double pivmin = std::max(scale, 1.0) * 1e-292;
  auto sd = [&](int i) { return K.diag[i] - lambda * M.diag[i]; };
  auto so = [&](int i) { return K.off[i] - Scalar(lambda) * M.off[i]; };

  int negatives = 0;
  if (!K.has_corner() && !M.has_corner()) {
    double d = sd(0);
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++negatives;
    for (int i = 1; i < n; ++i) {
      const double o2 = std::norm(std::complex<double>(so(i - 1)));
      d = sd(i) - o2 / d;
      if (std::abs(d) < pivmin) d = -pivmin;
      if (d < 0) ++negatives;
    }
    return negatives;
  }

  // ring: eliminate chain nodes 1..n-1, then the node-0 Schur pivot
  const int m = n - 1;
  const Scalar corner = K.corner - Scalar(lambda) * M.corner;
  std::complex<double> w_prev{};
  double bsq = 0.0;  // accumulated |w_i|^2 / d_i
  double d_prev = 0.0;
  std::complex<double> l_prev{};
  for (int i = 0; i < m; ++i) {
    double d = sd(i + 1);
    std::complex<double> w = (i == 0) ? std::complex<double>(HermTridiag<Scalar>::conj_of(so(0)))
                                      : std::complex<double>{};
    if (i == m - 1) w += std::complex<double>(HermTridiag<Scalar>::conj_of(corner));
    if (i > 0) {
      d -= std::norm(std::complex<double>(so(i))) / d_prev;
      w -= l_prev * w_prev;
    }
    // here l_prev multiplies the previous border entry: l_i = conj(off_i)/d_i
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++negatives;
    bsq += std::norm(w) / d;
    if (i + 1 < m) l_prev = std::complex<double>(HermTridiag<Scalar>::conj_of(so(i + 1))) / d;
    w_prev = w;
    d_prev = d;
  }
  double s = sd(0) - bsq;
  if (std::abs(s) < pivmin) s = -pivmin;
  if (s < 0) ++negatives;
  return negatives;
}

/// Conservative upper bound for the largest eigenvalue of (K, M).
template <typename Scalar>
double pencil_upper_bound(const HermTridiag<Scalar>& K, const HermTridiag<Scalar>& M) {
  const int n = K.size();
  double bound = 1.0;
  for (int i = 0; i < n; ++i) {
    double knum = std::abs(K.diag[i]);
    double mden = M.diag[i];
    if (i > 0) {
      knum += std::abs(std::complex<double>(K.off[i - 1]));
      mden -= std::abs(std::complex<double>(M.off[i - 1]));
    }
    if (i + 1 < n) {
      knum += std::abs(std::complex<double>(K.off[i]));
      mden -= std::abs(std::complex<double>(M.off[i]));
    }
    if (i == 0 || i == n - 1) {
      knum += std::abs(std::complex<double>(K.corner));
      mden -= std::abs(std::complex<double>(M.corner));
    }
    if (mden <= 0) mden = 0.25 * M.diag[i];  // lumped-mass fallback
    bound = std::max(bound, knum / mden);
  }
  // widen until the count certifies containment of the whole spectrum
  while (pencil_count_below(K, M, bound) < n) bound *= 2.0;
  return bound;
}

/// Eigenvalues k_lo..k_hi (1-indexed, ascending) of the pencil (K, M) by
/// bisection on the Sturm count. Tolerance is absolute on lambda.
template <typename Scalar>
std::vector<double> pencil_eigenvalues_by_index(const HermTridiag<Scalar>& K,
                                                const HermTridiag<Scalar>& M, int k_lo, int k_hi,
                                                double tol) {
  const int n = K.size();
  if (k_lo < 1 || k_hi > n || k_lo > k_hi) throw NumericError("eigenvalue index out of range");
  const double hi0 = pencil_upper_bound(K, M);
  double lo0 = 0.0;
  if (pencil_count_below(K, M, lo0) != 0) {
    lo0 = -1.0;
    while (pencil_count_below(K, M, lo0) != 0) lo0 *= 2.0;
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (int k = k_lo; k <= k_hi; ++k) {
    double lo = lo0, hi = hi0;
    while (hi - lo > tol + 1e-15 * std::max(std::abs(lo), std::abs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (pencil_count_below(K, M, mid) >= k)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
    lo0 = lo;  // eigenvalues are requested in ascending order
  }
  return out;
}

/// All eigenvalues of (K, M) inside the open interval (lo, hi).
template <typename Scalar>
std::vector<double> pencil_eigenvalues_in(const HermTridiag<Scalar>& K,
                                          const HermTridiag<Scalar>& M, double lo, double hi,
                                          double tol) {
  const int below_lo = pencil_count_below(K, M, lo);
  const int below_hi = pencil_count_below(K, M, hi);
  if (below_hi == below_lo) return {};
  return pencil_eigenvalues_by_index(K, M, below_lo + 1, below_hi, tol);
}

/// Eigenvector for an isolated (or clustered) eigenvalue near lambda via
/// inverse iteration; vectors in `prior` are deflated in the M-inner product
/// so clustered eigenvalues yield an M-orthonormal basis of the cluster.
template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> pencil_inverse_iteration(
    const HermTridiag<Scalar>& K, const HermTridiag<Scalar>& M, double lambda,
    const std::vector<Eigen::Vector<Scalar, Eigen::Dynamic>>& prior = {}, unsigned seed = 12345) {
  using Vec = Eigen::Vector<Scalar, Eigen::Dynamic>;
  const int n = K.size();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Scalar, double>)
      x[i] = unif(rng);
    else
      x[i] = Scalar(unif(rng), unif(rng));
  }
  const ShiftedPencilSolver<Scalar> solver(K, M, lambda);
  auto m_dot = [&](const Vec& a, const Vec& b) {
    // <a, b>_M = b^H M a
    return b.dot(M.multiply(a));
  };
  auto deflate = [&](Vec& v) {
    for (const auto& p : prior) v -= p * m_dot(v, p);
  };
  deflate(x);
  x /= std::sqrt(std::abs(m_dot(x, x)));
  for (int it = 0; it < 4; ++it) {
    Vec y = solver.solve(M.multiply(x));
    deflate(y);
    const double nrm = std::sqrt(std::abs(m_dot(y, y)));
    if (!(nrm > 0) || !std::isfinite(nrm)) throw NumericError("inverse iteration broke down");
    x = y / nrm;
  }
  return x;
}

}  // namespace hc1d
