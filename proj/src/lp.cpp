#include "minkspace/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace minkspace {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-10;
constexpr double kPhase1Tol = 1e-7;
constexpr int kMaxPivots = 50000;

// Row-major (m+1) x (n+1) tableau; last row holds reduced costs, last column
// the right-hand side. Minimization convention throughout.
struct Tableau {
    std::size_t m = 0, n = 0;
    std::vector<double> a;
    std::vector<int> basis;

    void init(std::size_t rows, std::size_t cols) {
        m = rows;
        n = cols;
        a.assign((m + 1) * (n + 1), 0.0);
        basis.assign(m, -1);
    }
    double& at(std::size_t i, std::size_t j) { return a[i * (n + 1) + j]; }
    double get(std::size_t i, std::size_t j) const { return a[i * (n + 1) + j]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double piv = at(pr, pc);
        for (std::size_t j = 0; j <= n; ++j) at(pr, j) /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n; ++j) at(i, j) -= f * at(pr, j);
            at(i, pc) = 0.0;
        }
        if (pr < m) basis[pr] = static_cast<int>(pc);
    }

    // Bland: entering = smallest column with negative reduced cost,
    // leaving = min ratio, ties broken by smallest basis index.
    enum class Step { Optimal, Pivoted, Unbounded };
    Step step() {
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (at(m, j) < -kReducedCostTol) {
                enter = j;
                break;
            }
        }
        if (enter == n) return Step::Optimal;
        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double aij = at(i, enter);
            if (aij <= kPivotTol) continue;
            const double ratio = at(i, n) / aij;
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && (leave == m || basis[i] < basis[leave]))) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == m) return Step::Unbounded;
        pivot(leave, enter);
        return Step::Pivoted;
    }
};

struct StandardForm {
    // structural columns for user variable j: pos[j] and (free vars) neg[j]
    std::vector<int> pos, neg;
    std::size_t n_struct = 0;      // structural incl. slack columns
    Mat rows;                      // coefficients over structural columns
    Vec rhs;                       // nonnegative
    std::vector<int> basic_slack;  // per row: slack column usable as start basis, or -1
};

StandardForm to_standard(const LinearProgram& p) {
    const std::size_t n = p.num_vars();
    StandardForm sf;
    sf.pos.assign(n, -1);
    sf.neg.assign(n, -1);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        sf.pos[j] = static_cast<int>(col++);
        if (!p.nonneg[j]) sf.neg[j] = static_cast<int>(col++);
    }
    std::size_t n_slack = 0;
    for (const auto& row : p.rows)
        if (row.rel != Rel::EQ) ++n_slack;
    sf.n_struct = col + n_slack;

    std::size_t slack_col = col;
    for (const auto& row : p.rows) {
        Vec r(sf.n_struct, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            r[sf.pos[j]] = row.coeffs[j];
            if (sf.neg[j] >= 0) r[sf.neg[j]] = -row.coeffs[j];
        }
        int slack = -1;
        double slack_sign = 0.0;
        if (row.rel != Rel::EQ) {
            slack = static_cast<int>(slack_col++);
            slack_sign = (row.rel == Rel::LE) ? 1.0 : -1.0;
            r[slack] = slack_sign;
        }
        double b = row.rhs;
        if (b < 0.0) {
            for (auto& v : r) v = -v;
            b = -b;
            slack_sign = -slack_sign;
        }
        // equilibrate coefficients so pivot tolerances stay meaningful at any
        // data scale; the rhs keeps the row's native magnitude
        double mag = 0.0;
        for (double v : r) mag = std::max(mag, std::abs(v));
        if (mag > 1.0) {
            for (auto& v : r) v /= mag;
            b /= mag;
        }
        sf.basic_slack.push_back(slack_sign > 0.0 ? slack : -1);
        sf.rows.push_back(std::move(r));
        sf.rhs.push_back(b);
    }
    return sf;
}

Vec objective_over_struct(const LinearProgram& p, const StandardForm& sf) {
    Vec c(sf.n_struct, 0.0);
    const double sgn = (p.sense == Sense::Minimize) ? 1.0 : -1.0;
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
        c[sf.pos[j]] = sgn * p.objective[j];
        if (sf.neg[j] >= 0) c[sf.neg[j]] = -sgn * p.objective[j];
    }
    return c;
}

}  // namespace

LpResult solve_lp_raw(const LinearProgram& p) {
    const std::size_t n = p.num_vars();
    if (p.nonneg.size() != n)
        throw ValidationError("linear program: nonneg flags must match the variable count");
    for (const auto& row : p.rows)
        if (row.coeffs.size() != n)
            throw ValidationError("linear program: constraint row width must match the variable count");
    if (!all_finite(p.objective))
        throw ValidationError("linear program: objective entries must be finite");
    for (const auto& row : p.rows)
        if (!all_finite(row.coeffs) || !std::isfinite(row.rhs))
            throw ValidationError("linear program: constraint entries must be finite");

    StandardForm sf = to_standard(p);
    const std::size_t m = sf.rows.size();

    // Phase 1. Artificial columns only where a +1 slack cannot start basic.
    std::vector<int> art(m, -1);
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (sf.basic_slack[i] < 0) art[i] = static_cast<int>(n_art++);

    Tableau t;
    t.init(m, sf.n_struct + n_art);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < sf.n_struct; ++j) t.at(i, j) = sf.rows[i][j];
        if (art[i] >= 0) {
            t.at(i, sf.n_struct + art[i]) = 1.0;
            t.basis[i] = static_cast<int>(sf.n_struct + art[i]);
        } else {
            t.basis[i] = sf.basic_slack[i];
        }
        t.at(i, t.n) = sf.rhs[i];
    }

    int pivots = 0;
    if (n_art > 0) {
        for (std::size_t i = 0; i < m; ++i) {
            if (art[i] < 0) continue;
            for (std::size_t j = 0; j <= t.n; ++j) t.at(m, j) -= t.at(i, j);
        }
        for (std::size_t k = 0; k < n_art; ++k) t.at(m, sf.n_struct + k) = 0.0;
        while (true) {
            auto s = t.step();
            if (s == Tableau::Step::Optimal) break;
            if (s == Tableau::Step::Unbounded) return {LpStatus::NumericalFailure, 0.0, {}};
            if (++pivots > kMaxPivots) return {LpStatus::NumericalFailure, 0.0, {}};
        }
        double bmax = 0.0;
        for (double b : sf.rhs) bmax = std::max(bmax, b);
        if (-t.get(m, t.n) > kPhase1Tol * (1.0 + bmax)) return {LpStatus::Infeasible, 0.0, {}};
        // Drive remaining artificials out of the basis where possible.
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < static_cast<int>(sf.n_struct)) continue;
            std::size_t pc = sf.n_struct;
            for (std::size_t j = 0; j < sf.n_struct; ++j) {
                if (std::abs(t.get(i, j)) > kPivotTol) {
                    pc = j;
                    break;
                }
            }
            if (pc < sf.n_struct) t.pivot(i, pc);
        }
    }

    // Phase 2 tableau over structural columns only; redundant all-zero rows
    // (those still carrying an artificial basic variable) are dropped.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < static_cast<int>(sf.n_struct)) keep.push_back(i);

    Tableau t2;
    t2.init(keep.size(), sf.n_struct);
    for (std::size_t r = 0; r < keep.size(); ++r) {
        for (std::size_t j = 0; j < sf.n_struct; ++j) t2.at(r, j) = t.get(keep[r], j);
        t2.at(r, t2.n) = t.get(keep[r], t.n);
        t2.basis[r] = t.basis[keep[r]];
    }
    const Vec c = objective_over_struct(p, sf);
    for (std::size_t j = 0; j < sf.n_struct; ++j) t2.at(t2.m, j) = c[j];
    for (std::size_t r = 0; r < t2.m; ++r) {
        const double cb = c[t2.basis[r]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= t2.n; ++j) t2.at(t2.m, j) -= cb * t2.at(r, j);
    }

    while (true) {
        auto s = t2.step();
        if (s == Tableau::Step::Optimal) break;
        if (s == Tableau::Step::Unbounded) return {LpStatus::Unbounded, 0.0, {}};
        if (++pivots > kMaxPivots) return {LpStatus::NumericalFailure, 0.0, {}};
    }

    Vec z(sf.n_struct, 0.0);
    for (std::size_t r = 0; r < t2.m; ++r) z[t2.basis[r]] = t2.at(r, t2.n);
    Vec x(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = z[sf.pos[j]];
        if (sf.neg[j] >= 0) x[j] -= z[sf.neg[j]];
    }
    return {LpStatus::Optimal, dot(p.objective, x), x};
}

LpResult solve_lp(const LinearProgram& p) {
    if (p.num_vars() == 0 || p.num_vars() > LinearProgram::kMaxVars)
        throw ValidationError("linear program: variable count must be between 1 and 64");
    if (p.rows.size() > LinearProgram::kMaxRows)
        throw ValidationError("linear program: at most 256 constraints are supported");

    LpResult r0 = solve_lp_raw(p);
    if (!r0.optimal()) return r0;

    // Lexicographic tie-break: pin the objective, then the variables in order.
    LinearProgram q = p;
    q.sense = Sense::Minimize;
    const double pin = 1e-9 * (1.0 + std::abs(r0.value));
    if (p.sense == Sense::Minimize)
        q.add_row(p.objective, Rel::LE, r0.value + pin);
    else
        q.add_row(p.objective, Rel::GE, r0.value - pin);

    Vec pt = r0.x;
    for (std::size_t k = 0; k < p.num_vars(); ++k) {
        q.objective = unit(p.num_vars(), k);
        LpResult rk = solve_lp_raw(q);
        if (!rk.optimal()) break;
        pt = rk.x;
        q.add_row(unit(p.num_vars(), k), Rel::LE, rk.x[k] + 1e-9 * (1.0 + std::abs(rk.x[k])));
    }
    return {LpStatus::Optimal, r0.value, pt};
}

FractionalExtrema solve_linear_fractional(const AffineFunctional& num,
                                          const AffineFunctional& den,
                                          const LinearProgram& region) {
    const std::size_t n = region.num_vars();
    if (num.coeffs.size() != n || den.coeffs.size() != n)
        throw ValidationError("linear fractional program: functional width must match the region");

    {
        LinearProgram check = region;
        check.sense = Sense::Minimize;
        check.objective = den.coeffs;
        LpResult dm = solve_lp_raw(check);
        if (dm.status == LpStatus::Infeasible)
            throw ValidationError("linear fractional program: feasible set is empty");
        if (dm.status == LpStatus::Unbounded || (dm.optimal() && dm.value + den.constant <= 1e-9))
            throw ValidationError(
                "linear fractional program: denominator must be positive on the feasible set");
        if (!dm.optimal())
            throw NumericalError("linear fractional program: denominator bound did not solve");
    }

    // Charnes-Cooper: u = t*w, t > 0, den'u + c_den*t = 1.
    LinearProgram cc;
    cc.objective.assign(n + 1, 0.0);
    cc.nonneg = region.nonneg;
    cc.nonneg.push_back(true);
    for (const auto& row : region.rows) {
        Vec r = row.coeffs;
        r.push_back(-row.rhs);
        cc.add_row(std::move(r), row.rel, 0.0);
    }
    {
        Vec r = den.coeffs;
        r.push_back(den.constant);
        cc.add_row(std::move(r), Rel::EQ, 1.0);
    }
    for (std::size_t j = 0; j < n; ++j) cc.objective[j] = num.coeffs[j];
    cc.objective[n] = num.constant;

    auto run = [&](Sense s) -> std::pair<double, Vec> {
        cc.sense = s;
        LpResult r = solve_lp(cc);
        if (!r.optimal())
            throw NumericalError("linear fractional program: transformed program did not solve");
        const double t = r.x[n];
        if (t <= 1e-11)
            throw NumericalError("linear fractional program: degenerate homogenizing variable");
        Vec w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = r.x[j] / t;
        return {r.value, w};
    };

    auto [vmin, wmin] = run(Sense::Minimize);
    auto [vmax, wmax] = run(Sense::Maximize);
    return {vmin, vmax, std::move(wmin), std::move(wmax)};
}

}  // namespace minkspace
