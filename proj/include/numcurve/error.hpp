#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numcurve {

enum class ErrorKind {
  EmptyGenerators,
  NonCoprime,
  ZeroGenerator,
  NotAMember,
  GeneratorNotInS,
  ZeroInIdeal,
  EvenB,
  BNotInS,
  ParentMismatch,
  StabilizationFailure,
  UnknownPredicate,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every fault raised by the library. The kind is stable and is what the CLI
/// and the tests key on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace numcurve
