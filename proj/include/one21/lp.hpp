// Exact linear programming over rationals. Every guarantee in this library
// (path sparsity, relay selection, schedule existence) is a statement about
// corner points, so the solver always returns an optimal vertex together
// with its dual certificate and tight constraint set, all in exact
// arithmetic with no tolerances anywhere.
#pragma once

#include "one21/rational.hpp"

#include <utility>
#include <vector>

namespace one21 {

// maximize objective . x  subject to
//   le_rows[r] . x <= le_rhs[r]
//   eq_rows[r] . x == eq_rhs[r]
//   x >= 0 componentwise
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> le_rows;
    std::vector<Rational> le_rhs;
    std::vector<std::vector<Rational>> eq_rows;
    std::vector<Rational> eq_rhs;

    int add_variable(const Rational& objective_coefficient = Rational(0));
    void add_le(const std::vector<std::pair<int, Rational>>& terms, const Rational& rhs);
    void add_eq(const std::vector<std::pair<int, Rational>>& terms, const Rational& rhs);

    int num_le() const { return static_cast<int>(le_rows.size()); }
    int num_rows() const { return static_cast<int>(le_rows.size() + eq_rows.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// An optimal corner point. Rows are indexed le rows first, then eq rows;
// tight_set uses those indices and num_rows()+j for an active bound x_j = 0.
// duals is a dual-feasible vector with matching objective (strong duality),
// checked exactly before the solution is returned.
struct VertexSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> values;
    Rational objective_value = Rational(0);
    std::vector<Rational> duals;
    std::vector<int> tight_set;
};

// Two-phase simplex with Bland's rule (lowest-index entering variable,
// lowest-index tie break on leaving). Deterministic: identical inputs give
// identical vertices.
VertexSolution solve_lp(const LinearProgram& lp);

// Rank of the gradients of the tight constraints, by exact Gaussian
// elimination. Equals num_vars exactly when the solution is a vertex.
int tight_rank(const LinearProgram& lp, const VertexSolution& solution);

// Exact certificate check: primal feasibility, dual feasibility and equal
// primal/dual objective values. Throws std::logic_error on any failure.
void check_certificate(const LinearProgram& lp, const VertexSolution& solution);

}  // namespace one21
