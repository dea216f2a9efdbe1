#include "one21/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace one21 {

int LinearProgram::add_variable(const Rational& objective_coefficient) {
    objective.push_back(objective_coefficient);
    for (auto& row : le_rows) row.emplace_back(0);
    for (auto& row : eq_rows) row.emplace_back(0);
    return num_vars++;
}

namespace {

std::vector<Rational> dense_row(int n, const std::vector<std::pair<int, Rational>>& terms) {
    std::vector<Rational> row(n, Rational(0));
    for (const auto& [index, coefficient] : terms) {
        if (index < 0 || index >= n) {
            throw std::invalid_argument("constraint term references unknown variable");
        }
        row[index] += coefficient;
    }
    return row;
}

}  // namespace

void LinearProgram::add_le(const std::vector<std::pair<int, Rational>>& terms,
                           const Rational& rhs) {
    le_rows.push_back(dense_row(num_vars, terms));
    le_rhs.push_back(rhs);
}

void LinearProgram::add_eq(const std::vector<std::pair<int, Rational>>& terms,
                           const Rational& rhs) {
    eq_rows.push_back(dense_row(num_vars, terms));
    eq_rhs.push_back(rhs);
}

namespace {

// Dense tableau over rationals. Column layout: structural variables,
// one slack per <= row, then one artificial per row that needs it, then the
// right-hand side. Rows whose artificial cannot be driven out in phase one
// are redundant equalities and get dropped.
class Tableau {
public:
    explicit Tableau(const LinearProgram& lp) : lp_(lp) {
        const int n = lp.num_vars;
        const int m1 = lp.num_le();
        const int m2 = static_cast<int>(lp.eq_rows.size());
        slack_begin_ = n;
        art_begin_ = n + m1;

        int artificial_count = 0;
        for (int r = 0; r < m1; ++r) {
            if (lp.le_rhs[r] < 0) ++artificial_count;
        }
        artificial_count += m2;
        total_cols_ = art_begin_ + artificial_count;
        rhs_col_ = total_cols_;

        art_col_of_row_.assign(m1 + m2, -1);
        negated_.assign(m1 + m2, false);
        int next_art = art_begin_;
        for (int r = 0; r < m1 + m2; ++r) {
            const bool is_eq = r >= m1;
            const auto& coeffs = is_eq ? lp.eq_rows[r - m1] : lp.le_rows[r];
            const Rational& rhs = is_eq ? lp.eq_rhs[r - m1] : lp.le_rhs[r];
            std::vector<Rational> row(total_cols_ + 1, Rational(0));
            for (int j = 0; j < n; ++j) row[j] = coeffs[j];
            if (!is_eq) row[slack_begin_ + r] = 1;
            row[rhs_col_] = rhs;
            if (rhs < 0) {
                for (auto& v : row) v = -v;
                negated_[r] = true;
            }
            if (is_eq || negated_[r]) {
                art_col_of_row_[r] = next_art;
                row[next_art] = 1;
                basis_.push_back(next_art);
                ++next_art;
            } else {
                basis_.push_back(slack_begin_ + r);
            }
            rows_.push_back(std::move(row));
        }
    }

    // Returns false when phase one ends with positive infeasibility.
    bool phase_one() {
        if (art_begin_ == total_cols_) return true;
        // Reduced costs for maximizing -(sum of artificials).
        reduced_.assign(total_cols_ + 1, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] >= art_begin_) {
                for (int j = 0; j <= total_cols_; ++j) reduced_[j] -= rows_[r][j];
            }
        }
        for (int j = art_begin_; j < total_cols_; ++j) reduced_[j] += 1;
        run_simplex();
        if (reduced_[rhs_col_] != 0) return false;
        drive_out_artificials();
        return true;
    }

    // Returns false when the LP is unbounded.
    bool phase_two() {
        reduced_.assign(total_cols_ + 1, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational cost = column_cost(basis_[r]);
            if (cost != 0) {
                for (int j = 0; j <= total_cols_; ++j) reduced_[j] += cost * rows_[r][j];
            }
        }
        for (int j = 0; j < lp_.num_vars; ++j) reduced_[j] -= lp_.objective[j];
        return run_simplex();
    }

    std::vector<Rational> primal_values() const {
        std::vector<Rational> x(lp_.num_vars, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < lp_.num_vars) x[basis_[r]] = rows_[r][rhs_col_];
        }
        return x;
    }

    // Dual for original row r, read off the final reduced cost row. For a
    // <= row this is the entry under its slack column regardless of row
    // negation; for an equality row it is the entry under its artificial,
    // times the negation sign. The identity red[j] = y . A_stored[j] - c[j]
    // holds for every column of the stored system even after redundant rows
    // were dropped, because columns are never deleted.
    std::vector<Rational> dual_values() const {
        std::vector<Rational> duals(lp_.num_rows(), Rational(0));
        for (int r = 0; r < lp_.num_rows(); ++r) {
            if (r < lp_.num_le()) {
                duals[r] = reduced_[slack_begin_ + r];
            } else {
                duals[r] = negated_[r] ? -reduced_[art_col_of_row_[r]]
                                       : reduced_[art_col_of_row_[r]];
            }
        }
        return duals;
    }

private:
    Rational column_cost(int col) const {
        return col < lp_.num_vars ? lp_.objective[col] : Rational(0);
    }

    // Bland's rule: entering = lowest-index column with negative reduced
    // cost, leaving = lowest ratio with lowest basis index on ties.
    bool run_simplex() {
        for (;;) {
            int entering = -1;
            for (int j = 0; j < art_begin_; ++j) {
                if (reduced_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return true;

            int leaving = -1;
            Rational best_ratio(0);
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const Rational& coeff = rows_[r][entering];
                if (coeff <= 0) continue;
                Rational ratio = rows_[r][rhs_col_] / coeff;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(int row, int col) {
        auto& pivot_row = rows_[row];
        const Rational inverse = Rational(1) / pivot_row[col];
        if (inverse != 1) {
            for (auto& v : pivot_row) v *= inverse;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (static_cast<int>(r) == row) continue;
            eliminate(rows_[r], pivot_row, col);
        }
        eliminate(reduced_, pivot_row, col);
        basis_[row] = col;
    }

    static void eliminate(std::vector<Rational>& target,
                          const std::vector<Rational>& pivot_row, int col) {
        const Rational factor = target[col];
        if (factor == 0) return;
        for (std::size_t j = 0; j < target.size(); ++j) {
            if (pivot_row[j] != 0) target[j] -= factor * pivot_row[j];
        }
        target[col] = 0;
    }

    // After a feasible phase one, any artificial still basic sits at level
    // zero: pivot it out on a non-artificial column, or drop the row as
    // redundant when no such column remains.
    void drive_out_artificials() {
        for (std::size_t r = 0; r < rows_.size();) {
            if (basis_[r] < art_begin_) {
                ++r;
                continue;
            }
            int col = -1;
            for (int j = 0; j < art_begin_; ++j) {
                if (rows_[r][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                pivot(static_cast<int>(r), col);
                ++r;
            } else {
                rows_.erase(rows_.begin() + r);
                basis_.erase(basis_.begin() + r);
            }
        }
    }

    const LinearProgram& lp_;
    int slack_begin_ = 0;
    int art_begin_ = 0;
    int total_cols_ = 0;
    int rhs_col_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> reduced_;
    std::vector<int> basis_;
    std::vector<int> art_col_of_row_;
    std::vector<bool> negated_;
};

std::vector<int> tight_constraints(const LinearProgram& lp, const std::vector<Rational>& x) {
    std::vector<int> tight;
    for (int r = 0; r < lp.num_le(); ++r) {
        Rational lhs(0);
        for (int j = 0; j < lp.num_vars; ++j) lhs += lp.le_rows[r][j] * x[j];
        if (lhs == lp.le_rhs[r]) tight.push_back(r);
    }
    for (std::size_t r = 0; r < lp.eq_rows.size(); ++r) {
        tight.push_back(lp.num_le() + static_cast<int>(r));
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        if (x[j] == 0) tight.push_back(lp.num_rows() + j);
    }
    return tight;
}

}  // namespace

VertexSolution solve_lp(const LinearProgram& lp) {
    for (const auto& row : lp.le_rows) {
        if (static_cast<int>(row.size()) != lp.num_vars) {
            throw std::invalid_argument("malformed LP row");
        }
    }
    for (const auto& row : lp.eq_rows) {
        if (static_cast<int>(row.size()) != lp.num_vars) {
            throw std::invalid_argument("malformed LP row");
        }
    }
    if (static_cast<int>(lp.objective.size()) != lp.num_vars) {
        throw std::invalid_argument("malformed LP objective");
    }

    VertexSolution solution;
    Tableau tableau(lp);
    if (!tableau.phase_one()) {
        solution.status = LpStatus::Infeasible;
        return solution;
    }
    if (!tableau.phase_two()) {
        solution.status = LpStatus::Unbounded;
        return solution;
    }
    solution.status = LpStatus::Optimal;
    solution.values = tableau.primal_values();
    solution.duals = tableau.dual_values();
    Rational objective(0);
    for (int j = 0; j < lp.num_vars; ++j) objective += lp.objective[j] * solution.values[j];
    solution.objective_value = objective;
    solution.tight_set = tight_constraints(lp, solution.values);
    check_certificate(lp, solution);
    return solution;
}

int tight_rank(const LinearProgram& lp, const VertexSolution& solution) {
    std::vector<std::vector<Rational>> rows;
    for (int index : solution.tight_set) {
        if (index < lp.num_le()) {
            rows.push_back(lp.le_rows[index]);
        } else if (index < lp.num_rows()) {
            rows.push_back(lp.eq_rows[index - lp.num_le()]);
        } else {
            std::vector<Rational> bound(lp.num_vars, Rational(0));
            bound[index - lp.num_rows()] = 1;
            rows.push_back(std::move(bound));
        }
    }
    int rank = 0;
    for (int col = 0; col < lp.num_vars && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (int j = col; j < lp.num_vars; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

void check_certificate(const LinearProgram& lp, const VertexSolution& solution) {
    if (solution.status != LpStatus::Optimal) {
        throw std::logic_error("certificate check on a non-optimal solution");
    }
    const auto& x = solution.values;
    for (int j = 0; j < lp.num_vars; ++j) {
        if (x[j] < 0) throw std::logic_error("primal value below zero");
    }
    for (int r = 0; r < lp.num_le(); ++r) {
        Rational lhs(0);
        for (int j = 0; j < lp.num_vars; ++j) lhs += lp.le_rows[r][j] * x[j];
        if (lhs > lp.le_rhs[r]) throw std::logic_error("violated <= row");
    }
    for (std::size_t r = 0; r < lp.eq_rows.size(); ++r) {
        Rational lhs(0);
        for (int j = 0; j < lp.num_vars; ++j) lhs += lp.eq_rows[r][j] * x[j];
        if (lhs != lp.eq_rhs[r]) throw std::logic_error("violated == row");
    }

    const auto& y = solution.duals;
    for (int r = 0; r < lp.num_le(); ++r) {
        if (y[r] < 0) throw std::logic_error("negative dual on <= row");
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        Rational covered(0);
        for (int r = 0; r < lp.num_le(); ++r) covered += y[r] * lp.le_rows[r][j];
        for (std::size_t r = 0; r < lp.eq_rows.size(); ++r) {
            covered += y[lp.num_le() + r] * lp.eq_rows[r][j];
        }
        if (covered < lp.objective[j]) throw std::logic_error("dual infeasible column");
    }
    Rational dual_objective(0);
    for (int r = 0; r < lp.num_le(); ++r) dual_objective += y[r] * lp.le_rhs[r];
    for (std::size_t r = 0; r < lp.eq_rows.size(); ++r) {
        dual_objective += y[lp.num_le() + r] * lp.eq_rhs[r];
    }
    if (dual_objective != solution.objective_value) {
        throw std::logic_error("primal and dual objectives differ");
    }
}

}  // namespace one21
