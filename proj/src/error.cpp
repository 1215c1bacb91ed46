#include "pairsum/error.hpp"

namespace pairsum {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArity: return "invalid-arity";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::StructureNotFound: return "structure-not-found";
    case ErrorKind::BranchGuaranteeFailed: return "branch-guarantee-failed";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::PrecisionIndeterminate: return "precision-indeterminate";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

} // namespace pairsum
