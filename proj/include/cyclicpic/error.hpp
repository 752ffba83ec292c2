#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclicpic {

enum class ErrorKind {
  MissingVariable,
  DegreeMismatch,
  DegreeTooSmall,
  SingularMatrix,
  OutOfRange,
  InvalidParams,
  DenominatorVanished,
  ConstraintViolated,
  NotInSublattice,
  EmptyStack,
  NonLinearOccurrence,
  InternalInconsistency,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type; the CLI
// maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyclicpic
