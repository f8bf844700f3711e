#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfca {

enum class ErrorKind {
  TypeMismatch,
  InvalidStructure,
  InvalidParams,
  SearchBudgetExceeded,
  BudgetExceeded,
  ClosureBudgetExceeded,
  NotGirard,
  BaseMismatch,
  ColimitMissing,
  HypothesesNotMet,
  NotAdjoint,
  ConditionFailed,
  InvalidChu,
  NotAQuantale,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace qfca
