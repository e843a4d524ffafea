#pragma once

#include <stdexcept>
#include <string>

namespace wdual {

enum class ErrorKind {
  ElementNotFound,
  NotGraded,
  NotReduced,
  NoMinimum,
  NoMaximum,
  InvalidArgument,
  LimitExceeded,
  BudgetExhausted,
  Overflow,
  Precondition,
  InvalidForest,
  InvalidMerge,
  Parse,
  Internal,
};

const char *to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what);
  [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace wdual
