#include "wdual/error.hpp"

namespace wdual {

const char *to_string(ErrorKind k) {
  switch (k) {
  case ErrorKind::ElementNotFound: return "element-not-found";
  case ErrorKind::NotGraded: return "not-graded";
  case ErrorKind::NotReduced: return "not-transitively-reduced";
  case ErrorKind::NoMinimum: return "no-unique-minimum";
  case ErrorKind::NoMaximum: return "no-unique-maximum";
  case ErrorKind::InvalidArgument: return "invalid-argument";
  case ErrorKind::LimitExceeded: return "limit-exceeded";
  case ErrorKind::BudgetExhausted: return "budget-exhausted";
  case ErrorKind::Overflow: return "overflow";
  case ErrorKind::Precondition: return "precondition";
  case ErrorKind::InvalidForest: return "invalid-forest";
  case ErrorKind::InvalidMerge: return "invalid-merge";
  case ErrorKind::Parse: return "parse";
  case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

} // namespace wdual
