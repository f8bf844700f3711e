#include "qfca/errors.hpp"

namespace qfca {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorKind::NotGirard: return "NotGirard";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::ColimitMissing: return "ColimitMissing";
    case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorKind::NotAdjoint: return "NotAdjoint";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::InvalidChu: return "InvalidChu";
    case ErrorKind::NotAQuantale: return "NotAQuantale";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qfca
