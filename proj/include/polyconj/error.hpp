#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyconj {

enum class ErrorKind {
  ZeroPolynomial,
  NotRealRooted,
  NotSimple,
  DegreeMismatch,
  DegreeTooHigh,
  NonConvergence,
  ZeroCoefficient,
  NotAdmissible,
  IndexOutOfRange,
  NotRationallySplit,
  RealZerosNotSimple,
  OddDegree,
  CoincidentCriticalRoots,
  TooLarge,
  AtChargeSingularity,
  SingularOnLine,
  NotReal,
  EqualRealParts,
  DuplicateAxisRoots,
  MissingFinding,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI and the Python bindings can surface it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polyconj
