#pragma once

#include <string>
#include <vector>

namespace hc1d {

enum class ProfileKind { Constant, PiecewiseConstant, SampledGrid };

/// A strictly positive material coefficient on an interval [lo, hi].
///
/// Three representations are supported: a single constant, a piecewise
/// constant with explicit breakpoints, and uniform grid samples with linear
/// interpolation. Evaluation at a breakpoint follows the right-limit
/// convention. Values and their reciprocals must stay bounded, which for
/// these kinds reduces to every stored value being positive and finite.
class CoefficientProfile {
 public:
  static CoefficientProfile constant(double value, double lo, double hi);

  /// `breakpoints` includes both support endpoints; `values[i]` holds on
  /// [breakpoints[i], breakpoints[i+1]).
  static CoefficientProfile piecewise_constant(std::vector<double> breakpoints,
                                               std::vector<double> values);

  /// Uniform samples on [lo, hi] including both endpoints, linearly
  /// interpolated in between.
  static CoefficientProfile sampled(std::vector<double> samples, double lo, double hi);

  ProfileKind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  /// Point evaluation (right-limit convention at interior breakpoints).
  double operator()(double x) const;

  /// Exact integral of the coefficient over [x0, x1] within the support.
  double integral(double x0, double x1) const;

  /// Exact integral of 1/coefficient over [x0, x1].
  double inverse_integral(double x0, double x1) const;

  /// Interior points where the profile is not smooth, restricted to (x0, x1).
  std::vector<double> breakpoints_in(double x0, double x1) const;

  /// Smallest value attained on the support.
  double min_value() const;
  double max_value() const;

  /// Constant value on [x0, x1] if the profile is flat there, else NaN.
  double constant_on(double x0, double x1) const;

  const std::vector<double>& raw_breakpoints() const { return breakpoints_; }
  const std::vector<double>& raw_values() const { return values_; }

  bool operator==(const CoefficientProfile& other) const;

 private:
  CoefficientProfile() = default;
  void validate(const std::string& what) const;

  ProfileKind kind_ = ProfileKind::Constant;
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<double> breakpoints_;  // piecewise-constant only, includes endpoints
  std::vector<double> values_;       // pw-constant pieces or grid samples
};

}  // namespace hc1d
