#include "qgauss/error.hpp"

namespace qgauss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
    case ErrorKind::NonConvergent:
      return "NonConvergent";
    case ErrorKind::UnsupportedKind:
      return "UnsupportedKind";
    case ErrorKind::TermBudgetExceeded:
      return "TermBudgetExceeded";
    case ErrorKind::MethodMismatch:
      return "MethodMismatch";
  }
  return "Unknown";
}

}  // namespace qgauss
