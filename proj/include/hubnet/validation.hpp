#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hubnet {

enum class ValidationCode {
    UnknownVertex,
    DuplicateVertex,
    DuplicateEdge,
    SelfLoop,
    NegativeCost,
    CostOrderViolation,
    NonPositiveQuantity,
    TooFewCandidates,
    EmptyRole,
    DisconnectedNetwork,
    MarginOutsideCandidates,
};

std::string_view to_string(ValidationCode code);

struct ValidationIssue {
    ValidationCode code;
    std::string message;
};

// Carries every violation found, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<ValidationIssue> issues);
    const std::vector<ValidationIssue>& issues() const { return issues_; }

private:
    std::vector<ValidationIssue> issues_;
};

// Malformed input before validation: bad JSON, wrong types, numbers with
// more than 4 fractional digits.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hubnet
