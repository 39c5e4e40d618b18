#pragma once

#include <stdexcept>
#include <string>

namespace g2lab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeOverflow : Error {
  explicit DegreeOverflow(const std::string& msg) : Error(msg) {}
};
struct DegreeUnderflow : Error {
  explicit DegreeUnderflow(const std::string& msg) : Error(msg) {}
};
struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};
struct GridMismatch : Error {
  explicit GridMismatch(const std::string& msg) : Error(msg) {}
};
struct NonPositiveMetric : Error {
  explicit NonPositiveMetric(const std::string& msg) : Error(msg) {}
};

/// The 3-form failed the positivity test; `point` is the offending grid
/// point (or -1 for pointwise use).
struct NonPositiveForm : Error {
  long long point;
  explicit NonPositiveForm(const std::string& msg, long long pt = -1)
      : Error(msg), point(pt) {}
};

struct NotIn14 : Error {
  explicit NotIn14(const std::string& msg) : Error(msg) {}
};
struct ConstraintViolated : Error {
  explicit ConstraintViolated(const std::string& msg) : Error(msg) {}
};
struct BandLimitTooHigh : Error {
  explicit BandLimitTooHigh(const std::string& msg) : Error(msg) {}
};
struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error(msg) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};
struct NotClosed : Error {
  explicit NotClosed(const std::string& msg) : Error(msg) {}
};
struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& msg) : Error(msg) {}
};
struct PositivityLost : Error {
  explicit PositivityLost(const std::string& msg) : Error(msg) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct NoConvergence : Error {
  int iterations;
  double lastResidual;
  NoConvergence(const std::string& msg, int iters, double residual)
      : Error(msg), iterations(iters), lastResidual(residual) {}
};

}  // namespace g2lab
