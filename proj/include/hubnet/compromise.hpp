#pragma once

#include <optional>
#include <vector>

#include "hubnet/market.hpp"
#include "hubnet/money.hpp"

namespace hubnet {

// Selection over any nonnegative residual matrix. decision_level counts
// filter rounds from the max-residual row upward: 1 means the minimum was
// already unique there; nullopt means the tie survived every row.
struct SelectionResult {
    MoneyMatrix sorted_residuals;  // each column ascending
    std::vector<int> selected;     // column indices, ascending
    std::optional<int> decision_level;
    bool operator==(const SelectionResult&) const = default;
};

std::vector<Money> perfect_vector(const MoneyMatrix& gamma);
MoneyMatrix residual_matrix(const MoneyMatrix& gamma, const std::vector<Money>& perfect);
SelectionResult compromise_select(const MoneyMatrix& beta);

struct CompromiseResult {
    std::vector<Money> perfect;    // per-actor maximum payoff
    MoneyMatrix residuals;
    MoneyMatrix sorted_residuals;
    std::optional<int> decision_level;
    std::vector<int> selected;           // profile column indices
    std::vector<Money> selected_payoffs;  // payoff column of the first selected profile
    Money min_max_residual;
    bool operator==(const CompromiseResult&) const = default;
};

CompromiseResult solve_compromise(const MoneyMatrix& gamma);

}  // namespace hubnet
