#include "hubnet/validation.hpp"

namespace hubnet {

std::string_view to_string(ValidationCode code) {
    switch (code) {
        case ValidationCode::UnknownVertex: return "UnknownVertex";
        case ValidationCode::DuplicateVertex: return "DuplicateVertex";
        case ValidationCode::DuplicateEdge: return "DuplicateEdge";
        case ValidationCode::SelfLoop: return "SelfLoop";
        case ValidationCode::NegativeCost: return "NegativeCost";
        case ValidationCode::CostOrderViolation: return "CostOrderViolation";
        case ValidationCode::NonPositiveQuantity: return "NonPositiveQuantity";
        case ValidationCode::TooFewCandidates: return "TooFewCandidates";
        case ValidationCode::EmptyRole: return "EmptyRole";
        case ValidationCode::DisconnectedNetwork: return "DisconnectedNetwork";
        case ValidationCode::MarginOutsideCandidates: return "MarginOutsideCandidates";
    }
    return "Unknown";
}

namespace {

std::string summarize(const std::vector<ValidationIssue>& issues) {
    std::string out = "scenario validation failed with " + std::to_string(issues.size()) + " issue(s)";
    for (const auto& issue : issues) {
        out += "\n  [";
        out += to_string(issue.code);
        out += "] ";
        out += issue.message;
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

}  // namespace hubnet
