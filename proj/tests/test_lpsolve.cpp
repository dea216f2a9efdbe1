#include "one21/lp.hpp"

#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

using namespace one21;

namespace {

// Independent oracle: enumerate every choice of n constraints (rows and
// nonnegativity bounds), solve the square system exactly, keep feasible
// points, and take the best objective. Exponential but fine for n <= 4.
std::optional<Rational> enumerate_optimum(const LinearProgram& lp) {
    const int n = lp.num_vars;
    std::vector<std::vector<Rational>> rows = lp.le_rows;
    std::vector<Rational> rhs = lp.le_rhs;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> bound(n, Rational(0));
        bound[j] = 1;
        rows.push_back(std::move(bound));
        rhs.push_back(Rational(0));
    }
    const int total = static_cast<int>(rows.size());

    std::optional<Rational> best;
    std::vector<int> chosen;
    auto feasible = [&](const std::vector<Rational>& x) {
        for (int j = 0; j < n; ++j) {
            if (x[j] < 0) return false;
        }
        for (int r = 0; r < lp.num_le(); ++r) {
            Rational lhs(0);
            for (int j = 0; j < n; ++j) lhs += lp.le_rows[r][j] * x[j];
            if (lhs > lp.le_rhs[r]) return false;
        }
        return true;
    };
    auto try_candidate = [&]() {
        // solve rows[chosen] x = rhs[chosen] by Gaussian elimination
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = rows[chosen[i]][j];
            m[i][n] = rhs[chosen[i]];
        }
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r) {
                if (m[r][col] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return;  // singular, not a vertex
            std::swap(m[col], m[pivot]);
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rational factor = m[r][col] / m[col][col];
                for (int j = col; j <= n; ++j) m[r][j] -= factor * m[col][j];
            }
        }
        std::vector<Rational> x(n);
        for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
        if (!feasible(x)) return;
        Rational value(0);
        for (int j = 0; j < n; ++j) value += lp.objective[j] * x[j];
        if (!best || value > *best) best = value;
    };
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            try_candidate();
            return;
        }
        if (next >= total) return;
        chosen.push_back(next);
        self(self, next + 1);
        chosen.pop_back();
        self(self, next + 1);
    };
    recurse(recurse, 0);
    return best;
}

}  // namespace

TEST_CASE("one-variable program") {
    LinearProgram lp;
    int x = lp.add_variable(Rational(1));
    lp.add_le({{x, Rational(1)}}, Rational(1));
    auto solution = solve_lp(lp);
    REQUIRE(solution.status == LpStatus::Optimal);
    CHECK(solution.values[0] == 1);
    CHECK(solution.objective_value == 1);
    CHECK(tight_rank(lp, solution) == 1);
}

TEST_CASE("the crossed two-variable system lands on the exact corner") {
    LinearProgram lp;
    int x1 = lp.add_variable(Rational(1));
    int x2 = lp.add_variable(Rational(1));
    lp.add_le({{x1, Rational(1)}, {x2, Rational(1, 1000)}}, Rational(1));
    lp.add_le({{x1, Rational(1, 1000)}, {x2, Rational(1)}}, Rational(1));
    lp.add_le({{x1, Rational(1)}}, Rational(1));
    lp.add_le({{x2, Rational(1)}}, Rational(1));
    auto solution = solve_lp(lp);
    REQUIRE(solution.status == LpStatus::Optimal);
    CHECK(solution.values[0] == make_rational(1000, 1001));
    CHECK(solution.values[1] == make_rational(1000, 1001));
    CHECK(solution.objective_value == make_rational(2000, 1001));
    CHECK(tight_rank(lp, solution) == 2);
}

TEST_CASE("contradictory bounds are infeasible") {
    LinearProgram lp;
    int x = lp.add_variable(Rational(1));
    lp.add_le({{x, Rational(-1)}}, Rational(-2));  // x >= 2
    lp.add_le({{x, Rational(1)}}, Rational(1));    // x <= 1
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("missing ceiling is unbounded") {
    LinearProgram lp;
    lp.add_variable(Rational(1));  // free to grow
    int y = lp.add_variable(Rational(0));
    lp.add_le({{y, Rational(1)}}, Rational(3));
    CHECK(lp.num_vars == 2);
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("equality rows") {
    LinearProgram lp;
    int x = lp.add_variable(Rational(1));
    int y = lp.add_variable(Rational(1));
    lp.add_eq({{x, Rational(1)}, {y, Rational(1)}}, Rational(2));
    lp.add_le({{x, Rational(1)}}, Rational(3));
    auto solution = solve_lp(lp);
    REQUIRE(solution.status == LpStatus::Optimal);
    CHECK(solution.objective_value == 2);
    CHECK(solution.values[x] + solution.values[y] == 2);

    // redundant duplicate equality must not break anything
    LinearProgram lp2;
    int a = lp2.add_variable(Rational(3));
    int b = lp2.add_variable(Rational(1));
    lp2.add_eq({{a, Rational(1)}, {b, Rational(1)}}, Rational(1));
    lp2.add_eq({{a, Rational(2)}, {b, Rational(2)}}, Rational(2));
    auto second = solve_lp(lp2);
    REQUIRE(second.status == LpStatus::Optimal);
    CHECK(second.objective_value == 3);

    // inconsistent equalities are infeasible
    LinearProgram lp3;
    int c = lp3.add_variable(Rational(1));
    lp3.add_eq({{c, Rational(1)}}, Rational(1));
    lp3.add_eq({{c, Rational(1)}}, Rational(2));
    CHECK(solve_lp(lp3).status == LpStatus::Infeasible);
}

TEST_CASE("zero-variable and empty programs") {
    LinearProgram lp;
    auto solution = solve_lp(lp);
    REQUIRE(solution.status == LpStatus::Optimal);
    CHECK(solution.objective_value == 0);
}

TEST_CASE("random boxed programs match exhaustive vertex enumeration") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> dims(1, 4);
    std::uniform_int_distribution<int> row_count(0, 4);
    std::uniform_int_distribution<int> box(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        LinearProgram lp;
        const int n = dims(rng);
        for (int j = 0; j < n; ++j) lp.add_variable(Rational(coeff(rng)));
        const int extra = row_count(rng);
        for (int r = 0; r < extra; ++r) {
            std::vector<std::pair<int, Rational>> terms;
            for (int j = 0; j < n; ++j) terms.emplace_back(j, Rational(coeff(rng)));
            lp.add_le(terms, Rational(coeff(rng)));
        }
        for (int j = 0; j < n; ++j) {
            lp.add_le({{j, Rational(1)}}, Rational(box(rng)));  // keeps it bounded
        }

        auto solution = solve_lp(lp);
        auto oracle = enumerate_optimum(lp);
        if (solution.status == LpStatus::Infeasible) {
            CHECK(!oracle);
            continue;
        }
        REQUIRE(solution.status == LpStatus::Optimal);
        REQUIRE(oracle.has_value());
        CHECK(solution.objective_value == *oracle);
        CHECK(tight_rank(lp, solution) == n);
        // exactness: no tolerance slack on any tight row
        for (int index : solution.tight_set) {
            if (index < lp.num_le()) {
                Rational lhs(0);
                for (int j = 0; j < n; ++j) lhs += lp.le_rows[index][j] * solution.values[j];
                CHECK(lhs == lp.le_rhs[index]);
            }
        }
    }
}

TEST_CASE("determinism: repeated solves return the identical vertex") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        LinearProgram lp;
        for (int j = 0; j < 3; ++j) lp.add_variable(Rational(coeff(rng)));
        for (int r = 0; r < 3; ++r) {
            lp.add_le({{0, Rational(coeff(rng))}, {1, Rational(coeff(rng))},
                       {2, Rational(coeff(rng))}},
                      Rational(5));
        }
        for (int j = 0; j < 3; ++j) lp.add_le({{j, Rational(1)}}, Rational(4));
        auto first = solve_lp(lp);
        auto second = solve_lp(lp);
        REQUIRE(first.status == second.status);
        if (first.status == LpStatus::Optimal) {
            CHECK(first.values == second.values);
            CHECK(first.tight_set == second.tight_set);
        }
    }
}
