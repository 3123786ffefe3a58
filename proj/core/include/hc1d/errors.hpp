#pragma once

#include <stdexcept>
#include <string>

namespace hc1d {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration text; `field()` names the offending entry.
class ParseError : public Error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : Error("parse error at '" + field + "': " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A structurally valid input that violates a model invariant.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& field, const std::string& what)
      : Error("invalid '" + field + "': " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// ODE integration could not reach the requested tolerance.
class IntegrationError : public Error {
 public:
  IntegrationError(double where, const std::string& what)
      : Error(what_with_location(where, what)), location_(where) {}
  double location() const { return location_; }

 private:
  static std::string what_with_location(double where, const std::string& what) {
    return "integration failure near x=" + std::to_string(where) + ": " + what;
  }
  double location_;
};

/// Spectral parameter lies in a band where a gap-only construction was requested.
class NotInGapError : public Error {
 public:
  using Error::Error;
};

/// Requested value lies outside a computed range (e.g. band structure window).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Numerical linear algebra failure (singular pencil, lost bracketing, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Internal cross-check failed (e.g. discriminant not monotone inside a band).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hc1d
