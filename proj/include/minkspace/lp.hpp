#pragma once

#include <cstddef>
#include <vector>

#include "minkspace/vec.hpp"

namespace minkspace {

enum class Sense { Minimize, Maximize };
enum class Rel { LE, GE, EQ };
enum class LpStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

struct LpRow {
    Vec coeffs;
    Rel rel = Rel::LE;
    double rhs = 0.0;
};

// Dense desk-scale program: at most 64 variables and 256 constraints.
// Variables are either sign-restricted (x_i >= 0) or free.
struct LinearProgram {
    Sense sense = Sense::Minimize;
    Vec objective;
    std::vector<LpRow> rows;
    std::vector<bool> nonneg;  // one entry per variable; false = free

    static constexpr std::size_t kMaxVars = 64;
    static constexpr std::size_t kMaxRows = 256;

    std::size_t num_vars() const { return objective.size(); }
    void add_row(Vec coeffs, Rel rel, double rhs) { rows.push_back({std::move(coeffs), rel, rhs}); }
};

struct LpResult {
    LpStatus status = LpStatus::NumericalFailure;
    double value = 0.0;
    Vec x;
    bool optimal() const { return status == LpStatus::Optimal; }
};

// Two-phase dense simplex with Bland's rule. Degenerate optima are resolved to
// the lexicographically smallest optimal vertex (pinned within 1e-9 slack) so
// repeated runs report the same point.
LpResult solve_lp(const LinearProgram& p);

// Single simplex run, no lexicographic refinement.
LpResult solve_lp_raw(const LinearProgram& p);

struct AffineFunctional {
    Vec coeffs;
    double constant = 0.0;
};

struct FractionalExtrema {
    double min_value = 0.0;
    double max_value = 0.0;
    Vec argmin;
    Vec argmax;
};

// Extrema of (num.coeffs'w + num.constant) / (den.coeffs'w + den.constant)
// over the region described by `region` (its objective and sense are ignored),
// via the Charnes-Cooper substitution and two solve_lp calls. The denominator
// must be positive on the whole region; otherwise ValidationError.
FractionalExtrema solve_linear_fractional(const AffineFunctional& num,
                                          const AffineFunctional& den,
                                          const LinearProgram& region);

}  // namespace minkspace
