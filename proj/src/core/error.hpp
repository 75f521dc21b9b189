#pragma once

#include <stdexcept>
#include <string>

namespace igp {

// Error taxonomy shared by every module. The C API maps these kinds onto
// status codes one-to-one, so throw the most specific kind that applies.
enum class ErrorKind {
  InvalidArgument,  // contract violation: bad precision, prime mismatch, short prefix
  Domain,           // input outside the mathematical domain of the operation
  Budget,           // enumeration would exceed the configured work budget
  Parse,            // malformed textual input
  Precision,        // certified bounds cannot reach the requested precision
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorKind::InvalidArgument, what) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(ErrorKind::Budget, what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};
struct PrecisionError : Error {
  explicit PrecisionError(const std::string& what)
      : Error(ErrorKind::Precision, what) {}
};

}  // namespace igp
