#include "hc1d/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hc1d/errors.hpp"

namespace hc1d {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

CoefficientProfile CoefficientProfile::constant(double value, double lo, double hi) {
  CoefficientProfile p;
  p.kind_ = ProfileKind::Constant;
  p.lo_ = lo;
  p.hi_ = hi;
  p.values_ = {value};
  p.validate("constant profile");
  return p;
}

CoefficientProfile CoefficientProfile::piecewise_constant(std::vector<double> breakpoints,
                                                          std::vector<double> values) {
  CoefficientProfile p;
  p.kind_ = ProfileKind::PiecewiseConstant;
  if (breakpoints.size() < 2)
    throw ValidationError("breakpoints", "need at least the two support endpoints");
  if (values.size() + 1 != breakpoints.size())
    throw ValidationError("values", "expected one value per interval between breakpoints");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
    throw ValidationError("breakpoints", "must be increasing");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw ValidationError("breakpoints", "must be strictly increasing");
  p.lo_ = breakpoints.front();
  p.hi_ = breakpoints.back();
  p.breakpoints_ = std::move(breakpoints);
  p.values_ = std::move(values);
  p.validate("piecewise-constant profile");
  return p;
}

CoefficientProfile CoefficientProfile::sampled(std::vector<double> samples, double lo, double hi) {
  CoefficientProfile p;
  p.kind_ = ProfileKind::SampledGrid;
  if (samples.size() < 2) throw ValidationError("samples", "need at least two grid samples");
  p.lo_ = lo;
  p.hi_ = hi;
  p.values_ = std::move(samples);
  p.validate("sampled profile");
  return p;
}

void CoefficientProfile::validate(const std::string& what) const {
  if (!(lo_ < hi_)) throw ValidationError(what, "support must be a nondegenerate interval");
  for (double v : values_) {
    if (!std::isfinite(v) || v <= 0.0)
      throw ValidationError(what, "all values must be finite and strictly positive");
  }
}

double CoefficientProfile::operator()(double x) const {
  switch (kind_) {
    case ProfileKind::Constant:
      return values_[0];
    case ProfileKind::PiecewiseConstant: {
      // right-limit convention: piece i covers [b_i, b_{i+1})
      auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
      std::ptrdiff_t idx = (it - breakpoints_.begin()) - 1;
      idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(values_.size()) - 1);
      return values_[static_cast<std::size_t>(idx)];
    }
    case ProfileKind::SampledGrid: {
      const std::size_t n = values_.size();
      const double t = (x - lo_) / (hi_ - lo_) * static_cast<double>(n - 1);
      if (t <= 0.0) return values_.front();
      if (t >= static_cast<double>(n - 1)) return values_.back();
      const std::size_t i = static_cast<std::size_t>(t);
      const double f = t - static_cast<double>(i);
      return values_[i] * (1.0 - f) + values_[i + 1] * f;
    }
  }
  return kNaN;
}

double CoefficientProfile::integral(double x0, double x1) const {
  if (x1 < x0) return -integral(x1, x0);
  switch (kind_) {
    case ProfileKind::Constant:
      return values_[0] * (x1 - x0);
    case ProfileKind::PiecewiseConstant: {
      double acc = 0.0;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        const double a = std::max(x0, breakpoints_[i]);
        const double b = std::min(x1, breakpoints_[i + 1]);
        if (b > a) acc += values_[i] * (b - a);
      }
      return acc;
    }
    case ProfileKind::SampledGrid: {
      const std::size_t n = values_.size();
      const double dx = (hi_ - lo_) / static_cast<double>(n - 1);
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xl = lo_ + dx * static_cast<double>(i);
        const double xr = xl + dx;
        const double a = std::max(x0, xl);
        const double b = std::min(x1, xr);
        if (b <= a) continue;
        const double va = (*this)(a);
        const double vb = (*this)(b);
        acc += 0.5 * (va + vb) * (b - a);  // exact: linear on the segment
      }
      return acc;
    }
  }
  return kNaN;
}

double CoefficientProfile::inverse_integral(double x0, double x1) const {
  if (x1 < x0) return -inverse_integral(x1, x0);
  switch (kind_) {
    case ProfileKind::Constant:
      return (x1 - x0) / values_[0];
    case ProfileKind::PiecewiseConstant: {
      double acc = 0.0;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        const double a = std::max(x0, breakpoints_[i]);
        const double b = std::min(x1, breakpoints_[i + 1]);
        if (b > a) acc += (b - a) / values_[i];
      }
      return acc;
    }
    case ProfileKind::SampledGrid: {
      // per segment the value is p + q t; integral of the reciprocal is
      // log((p+q b)/(p+q a))/q, degenerating to (b-a)/p for flat segments
      const std::size_t n = values_.size();
      const double dx = (hi_ - lo_) / static_cast<double>(n - 1);
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xl = lo_ + dx * static_cast<double>(i);
        const double xr = xl + dx;
        const double a = std::max(x0, xl);
        const double b = std::min(x1, xr);
        if (b <= a) continue;
        const double q = (values_[i + 1] - values_[i]) / dx;
        const double va = (*this)(a);
        const double vb = (*this)(b);
        if (std::abs(q) * (b - a) < 1e-14 * va) {
          acc += 2.0 * (b - a) / (va + vb);
        } else {
          acc += std::log(vb / va) / q;
        }
      }
      return acc;
    }
  }
  return kNaN;
}

std::vector<double> CoefficientProfile::breakpoints_in(double x0, double x1) const {
  std::vector<double> out;
  switch (kind_) {
    case ProfileKind::Constant:
      break;
    case ProfileKind::PiecewiseConstant:
      for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i)
        if (breakpoints_[i] > x0 && breakpoints_[i] < x1) out.push_back(breakpoints_[i]);
      break;
    case ProfileKind::SampledGrid: {
      const std::size_t n = values_.size();
      const double dx = (hi_ - lo_) / static_cast<double>(n - 1);
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const double x = lo_ + dx * static_cast<double>(i);
        if (x > x0 && x < x1) out.push_back(x);
      }
      break;
    }
  }
  return out;
}

double CoefficientProfile::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double CoefficientProfile::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double CoefficientProfile::constant_on(double x0, double x1) const {
  switch (kind_) {
    case ProfileKind::Constant:
      return values_[0];
    case ProfileKind::PiecewiseConstant: {
      const double v = (*this)(x0);
      for (std::size_t i = 0; i < values_.size(); ++i) {
        const double a = std::max(x0, breakpoints_[i]);
        const double b = std::min(x1, breakpoints_[i + 1]);
        if (b > a && values_[i] != v) return kNaN;
      }
      return v;
    }
    case ProfileKind::SampledGrid: {
      const double v = (*this)(x0);
      if ((*this)(x1) != v) return kNaN;
      for (double b : breakpoints_in(x0, x1))
        if ((*this)(b) != v) return kNaN;
      return v;
    }
  }
  return kNaN;
}

bool CoefficientProfile::operator==(const CoefficientProfile& other) const {
  return kind_ == other.kind_ && lo_ == other.lo_ && hi_ == other.hi_ &&
         breakpoints_ == other.breakpoints_ && values_ == other.values_;
}

}  // namespace hc1d
