#ifndef THETAREP_ERRORS_HPP
#define THETAREP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace thetarep {

enum class ErrorKind {
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  OutOfRange,
  NotSplit,
  PreconditionViolated,
  SingularMatrix,
  DimensionMismatch,
  DegreeMismatch,
  AmbientMismatch,
  BoundViolated,
  DimensionOverflow,
  NotStable,
  Ambiguous,
  NonGeneric,
  InvalidConfig,
};

const char* error_kind_name(ErrorKind k);

/// All library errors carry a machine-checkable kind next to the message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// NotSplit failures report which tensor blocks broke the binomial condition.
class NotSplitError : public Error {
public:
  NotSplitError(std::vector<int> blocks, const std::string& what)
      : Error(ErrorKind::NotSplit, what), blocks_(std::move(blocks)) {}

  const std::vector<int>& blocks() const { return blocks_; }

private:
  std::vector<int> blocks_;
};

}  // namespace thetarep

#endif
