#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pairsum {

enum class ErrorKind {
    InvalidArity,
    InvalidInput,
    HypothesisViolation,
    PreconditionViolation,
    StructureNotFound,
    BranchGuaranteeFailed,
    DomainError,
    PrecisionIndeterminate,
    DegenerateInput,
    OutOfRange,
    BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

// Domain error raised by every module. `subject` optionally carries the
// integer set the failure is about (e.g. the Sidon half-set that blocked the
// even-set lemma).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::int64_t> subject = {})
        : std::runtime_error(message), kind_(kind), subject_(std::move(subject))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::int64_t>& subject() const noexcept { return subject_; }

private:
    ErrorKind kind_;
    std::vector<std::int64_t> subject_;
};

} // namespace pairsum
