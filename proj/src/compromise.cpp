#include "hubnet/compromise.hpp"

#include <algorithm>

namespace hubnet {

std::vector<Money> perfect_vector(const MoneyMatrix& gamma) {
    if (gamma.cols() < 1) throw std::invalid_argument("payoff matrix needs at least one column");
    std::vector<Money> perfect(gamma.rows());
    for (int r = 0; r < gamma.rows(); ++r) {
        Money best = gamma.at(r, 0);
        for (int c = 1; c < gamma.cols(); ++c) best = std::max(best, gamma.at(r, c));
        perfect[r] = best;
    }
    return perfect;
}

MoneyMatrix residual_matrix(const MoneyMatrix& gamma, const std::vector<Money>& perfect) {
    if (static_cast<int>(perfect.size()) != gamma.rows())
        throw std::invalid_argument("perfect vector size mismatch");
    MoneyMatrix beta(gamma.rows(), gamma.cols());
    for (int r = 0; r < gamma.rows(); ++r)
        for (int c = 0; c < gamma.cols(); ++c) beta.at(r, c) = perfect[r] - gamma.at(r, c);
    return beta;
}

SelectionResult compromise_select(const MoneyMatrix& beta) {
    const int rows = beta.rows();
    const int cols = beta.cols();
    if (rows < 1 || cols < 1) throw std::invalid_argument("residual matrix must be nonempty");

    SelectionResult result;
    result.sorted_residuals = beta;
    for (int c = 0; c < cols; ++c) {
        std::vector<Money> column(rows);
        for (int r = 0; r < rows; ++r) column[r] = beta.at(r, c);
        std::sort(column.begin(), column.end());
        for (int r = 0; r < rows; ++r) result.sorted_residuals.at(r, c) = column[r];
    }

    std::vector<int> survivors(cols);
    for (int c = 0; c < cols; ++c) survivors[c] = c;

    // Filter by the largest residual, then by each next-smaller one while
    // the tie persists.
    for (int level = 1; level <= rows; ++level) {
        int row = rows - level;
        Money min_value = result.sorted_residuals.at(row, survivors.front());
        for (int c : survivors) min_value = std::min(min_value, result.sorted_residuals.at(row, c));
        std::vector<int> kept;
        for (int c : survivors)
            if (result.sorted_residuals.at(row, c) == min_value) kept.push_back(c);
        survivors = std::move(kept);
        if (survivors.size() == 1) {
            result.decision_level = level;
            break;
        }
    }
    result.selected = std::move(survivors);
    return result;
}

CompromiseResult solve_compromise(const MoneyMatrix& gamma) {
    CompromiseResult result;
    result.perfect = perfect_vector(gamma);
    result.residuals = residual_matrix(gamma, result.perfect);

    SelectionResult selection = compromise_select(result.residuals);
    result.sorted_residuals = std::move(selection.sorted_residuals);
    result.decision_level = selection.decision_level;
    result.selected = std::move(selection.selected);

    int first = result.selected.front();
    result.selected_payoffs.reserve(gamma.rows());
    for (int r = 0; r < gamma.rows(); ++r) result.selected_payoffs.push_back(gamma.at(r, first));
    result.min_max_residual = result.sorted_residuals.at(gamma.rows() - 1, first);
    return result;
}

}  // namespace hubnet
