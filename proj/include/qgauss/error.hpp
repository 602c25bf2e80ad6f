#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgauss {

enum class ErrorKind {
  InvalidArgument,
  NonConvergent,
  UnsupportedKind,
  TermBudgetExceeded,
  MethodMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// front ends can map it to a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qgauss
