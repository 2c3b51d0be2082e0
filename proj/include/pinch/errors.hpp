#ifndef PINCH_ERRORS_HPP
#define PINCH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pinch {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OutOfDomain : public Error {
public:
  explicit OutOfDomain(const std::string& what) : Error(what) {}
};

class SingularMetric : public Error {
public:
  explicit SingularMetric(const std::string& what) : Error(what) {}
};

class DegeneratePlane : public Error {
public:
  explicit DegeneratePlane(const std::string& what) : Error(what) {}
};

class NotTangentToLevel : public Error {
public:
  explicit NotTangentToLevel(const std::string& what) : Error(what) {}
};

class NoSplit : public Error {
public:
  explicit NoSplit(const std::string& what) : Error(what) {}
};

class MismatchedSplit : public Error {
public:
  explicit MismatchedSplit(const std::string& what) : Error(what) {}
};

class NonNegativeCurvatureDetected : public Error {
public:
  explicit NonNegativeCurvatureDetected(const std::string& what) : Error(what) {}
};

class DegenerateDenominator : public Error {
public:
  explicit DegenerateDenominator(const std::string& what) : Error(what) {}
};

class LeftDomain : public Error {
public:
  LeftDomain(const std::string& what, std::vector<double> exit_point)
      : Error(what), exit_point(std::move(exit_point)) {}
  std::vector<double> exit_point;
};

class ZeroVelocity : public Error {
public:
  explicit ZeroVelocity(const std::string& what) : Error(what) {}
};

/// Distance solver failed to meet its tolerance; carries the best upper
/// bound found so far and the residual it achieved.
class NoConvergence : public Error {
public:
  NoConvergence(const std::string& what, double best_upper_bound, double residual)
      : Error(what), best_upper_bound(best_upper_bound), residual(residual) {}
  double best_upper_bound;
  double residual;
};

class EndpointsNotDiagonal : public Error {
public:
  explicit EndpointsNotDiagonal(const std::string& what) : Error(what) {}
};

class BoundViolated : public Error {
public:
  BoundViolated(const std::string& what, std::string segment, double slack)
      : Error(what), segment(std::move(segment)), slack(slack) {}
  std::string segment;
  double slack;
};

class InvalidDimension : public Error {
public:
  explicit InvalidDimension(const std::string& what) : Error(what) {}
};

/// Scalar-level evaluation error (log of a nonpositive value, division by
/// zero, ...). Raised by the expression evaluator.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Parse error with source location (1-based line/column) and a snippet of
/// the offending line.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, int line, int column, std::string snippet)
      : Error(what), line(line), column(column), snippet(std::move(snippet)) {}
  int line;
  int column;
  std::string snippet;
};

class UnknownVariable : public SyntaxError {
public:
  UnknownVariable(const std::string& what, int line, int column, std::string snippet)
      : SyntaxError(what, line, column, std::move(snippet)) {}
};

class UnknownFunction : public SyntaxError {
public:
  UnknownFunction(const std::string& what, int line, int column, std::string snippet)
      : SyntaxError(what, line, column, std::move(snippet)) {}
};

/// A declared metric failed validation (non-symmetric, not positive
/// definite, or non-finite on the validation grid). Carries the offending
/// grid point.
class ValidationFailure : public Error {
public:
  ValidationFailure(const std::string& what, std::vector<double> point)
      : Error(what), point(std::move(point)) {}
  std::vector<double> point;
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace pinch

#endif
