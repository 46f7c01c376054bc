#include "minkspace/subdifferential.hpp"

#include <algorithm>
#include <cmath>

namespace minkspace {

namespace {

// feasible region of the H-polytope subdifferential in facet-weight space:
// x* = sum w_i a_i, w in the simplex, <x*, x> >= gamma_base(x) - eps_base
LinearProgram h_weight_region(const Gauge& g, const Vec& x, double eps_base) {
    const Mat& a = g.normals();
    const std::size_t m = a.size();
    LinearProgram lp;
    lp.objective = zeros(m);
    lp.nonneg.assign(m, true);
    lp.add_row(Vec(m, 1.0), Rel::EQ, 1.0);
    Vec ax(m);
    for (std::size_t i = 0; i < m; ++i) ax[i] = dot(a[i], x);
    const double gx = g.eval(x) / g.scale();
    lp.add_row(std::move(ax), Rel::GE, gx - eps_base);
    return lp;
}

// the same set in functional space for V-polytopes:
// <v_i, x*> <= 1, <x, x*> >= gamma_base(x) - eps_base
LinearProgram v_functional_region(const Gauge& g, const Vec& x, double eps_base) {
    const Mat& v = g.vertices();
    LinearProgram lp;
    lp.objective = zeros(g.dim());
    lp.nonneg.assign(g.dim(), false);
    for (const auto& vi : v) lp.add_row(vi, Rel::LE, 1.0);
    const double gx = g.eval(x) / g.scale();
    lp.add_row(x, Rel::GE, gx - eps_base);
    return lp;
}

double dd_lp(const Gauge& g, const Vec& x, const Vec& y, double eps) {
    const double eps_base = eps / g.scale();
    if (g.kind() == GaugeKind::PolytopeH) {
        const Mat& a = g.normals();
        LinearProgram lp = h_weight_region(g, x, eps_base);
        lp.sense = Sense::Maximize;
        for (std::size_t i = 0; i < a.size(); ++i) lp.objective[i] = dot(a[i], y);
        LpResult r = solve_lp_raw(lp);
        if (!r.optimal()) throw NumericalError("directional derivative LP failed");
        return g.scale() * r.value;
    }
    LinearProgram lp = v_functional_region(g, x, eps_base);
    lp.sense = Sense::Maximize;
    lp.objective = y;
    LpResult r = solve_lp_raw(lp);
    if (!r.optimal()) throw NumericalError("directional derivative LP failed");
    return g.scale() * r.value;
}

// slope minimization after normalizing x and y to unit Euclidean length;
// gamma'_eps(x; y) = |y| gamma'_{eps/|x|}(x/|x|; y/|y|)
double dd_slope(const Gauge& g, const Vec& x, const Vec& y, double eps) {
    const double ny = norm2(y);
    if (ny == 0.0) return 0.0;
    const Vec yh = scaled(y, 1.0 / ny);
    const double nx = norm2(x);
    if (nx == 0.0) return ny * g.eval(yh);
    const Vec xh = scaled(x, 1.0 / nx);
    const double eps_n = eps / nx;

    const double gx = g.eval(xh);
    if (eps_n <= 1e-13 * (1.0 + gx)) {
        // difference quotients are non-decreasing in lambda; take the limit at
        // the finite-difference-optimal step instead of chasing lambda -> 0
        const double h = std::ldexp(1.0, -26);
        return ny * (g.eval(axpy(h, yh, xh)) - gx) / h;
    }

    const double gy = g.eval(yh);
    auto slope = [&](double lam) { return (g.eval(axpy(lam, yh, xh)) - gx + eps_n) / lam; };
    const double spread = gx + g.eval(negated(xh)) + eps_n + 1.0;
    const double lam_lo = 1e-12;
    const double lam_hi = spread * 1e8 / std::max(gy, 1e-8);

    // log-spaced scan, then golden section inside the minimizing cell
    const int npts = 200;
    const double llo = std::log(lam_lo), lhi = std::log(lam_hi);
    int first = 0, last = 0;
    double best = slope(lam_lo);
    std::vector<double> lam(npts);
    for (int i = 0; i < npts; ++i) lam[i] = std::exp(llo + (lhi - llo) * i / (npts - 1));
    for (int i = 1; i < npts; ++i) {
        const double s = slope(lam[i]);
        if (s < best - 1e-15) {
            best = s;
            first = last = i;
        } else if (s <= best + 1e-15) {
            last = i;
        }
    }
    const double a = lam[std::max(first - 1, 0)];
    const double b = lam[std::min(last + 1, npts - 1)];
    Min1D m = golden_min(slope, a, b, 1e-10 * b);
    return ny * std::min({m.value, best, gy});
}

Vec ellipsoid_gradient(const Gauge& g, const Vec& x);

Vec cap_argmax_ellipsoid(const Gauge& g, const Vec& x, double eps_base, const Vec& u) {
    // maximize <u, .> over {polar ball} cut by <x, .> >= gamma_base(x) - eps_base,
    // reduced to the 2D span of the transformed direction pair
    const Gauge pg = polar_gauge(g);
    const Mat l = cholesky(pg.q());
    const Vec& m = pg.center();
    const Vec ut = forward_subst(l, u);
    const Vec xt = forward_subst(l, x);
    const double c0 = g.eval(x) / g.scale() - eps_base;
    const double c0t = c0 - dot(x, m);

    const double xn = norm2(xt);
    if (xn == 0.0) throw NumericalError("degenerate base direction in subdifferential cap");
    const Vec e1 = scaled(xt, 1.0 / xn);
    const double p_min = std::clamp(c0t / xn, -1.0, 1.0);

    Vec w;
    const Vec r = sub(ut, scaled(e1, dot(ut, e1)));
    const double rn = norm2(r);
    if (rn > 1e-13 * (1.0 + norm2(ut))) {
        const Vec e2 = scaled(r, 1.0 / rn);
        const double un = norm2(ut);
        const double p0 = dot(ut, e1) / un;
        if (p0 >= p_min) {
            w = scaled(ut, 1.0 / un);
        } else {
            w = axpy(std::sqrt(std::max(0.0, 1.0 - p_min * p_min)), e2, scaled(e1, p_min));
        }
    } else {
        const double sigma = dot(ut, e1);
        if (sigma >= 0.0) {
            w = e1;
        } else {
            Vec eperp;
            for (std::size_t k = 0; k < g.dim(); ++k) {
                Vec cand = sub(unit(g.dim(), k), scaled(e1, e1[k]));
                if (norm2(cand) > 1e-8) {
                    eperp = scaled(cand, 1.0 / norm2(cand));
                    break;
                }
            }
            w = axpy(std::sqrt(std::max(0.0, 1.0 - p_min * p_min)), eperp, scaled(e1, p_min));
        }
    }
    return scaled(add(m, back_subst_t(l, w)), g.scale());
}

Vec ellipsoid_gradient(const Gauge& g, const Vec& x) {
    const double gb = g.eval(x) / g.scale();
    const Vec p = scaled(x, 1.0 / gb);
    const Vec n = mat_vec(g.q(), sub(p, g.center()));
    return scaled(n, g.scale() / dot(n, p));
}

Vec extreme_point_impl(const Gauge& g, const Vec& x, double eps, const Vec& u) {
    const double kappa = g.scale();
    const double eps_base = eps / kappa;
    if (norm2(x) == 0.0) {
        // polar unit ball of the scaled gauge, independently of eps
        return polar_gauge(g).support_point(u);
    }
    switch (g.kind()) {
        case GaugeKind::PolytopeH: {
            const Mat& a = g.normals();
            LinearProgram lp = h_weight_region(g, x, eps_base);
            lp.sense = Sense::Maximize;
            for (std::size_t i = 0; i < a.size(); ++i) lp.objective[i] = dot(a[i], u);
            LpResult r = solve_lp(lp);
            if (!r.optimal()) throw NumericalError("subdifferential extreme-point LP failed");
            Vec xs = zeros(g.dim());
            for (std::size_t i = 0; i < a.size(); ++i) xs = axpy(r.x[i], a[i], xs);
            return scaled(xs, kappa);
        }
        case GaugeKind::PolytopeV: {
            LinearProgram lp = v_functional_region(g, x, eps_base);
            lp.sense = Sense::Maximize;
            lp.objective = u;
            LpResult r = solve_lp(lp);
            if (!r.optimal()) throw NumericalError("subdifferential extreme-point LP failed");
            return scaled(r.x, kappa);
        }
        case GaugeKind::Ellipsoid: {
            const double gb = g.eval(x) / kappa;
            if (eps_base <= 1e-13 * (1.0 + gb)) return ellipsoid_gradient(g, x);
            return cap_argmax_ellipsoid(g, x, eps_base, u);
        }
    }
    throw ValidationError("extreme point: unknown gauge kind");
}

}  // namespace

double directional_derivative(const Gauge& g, const Vec& x, const Vec& y, double eps,
                              DdMethod method) {
    require_dim(x, g.dim(), "directional derivative base point");
    require_dim(y, g.dim(), "directional derivative direction");
    if (eps < 0.0) throw ValidationError("relaxation eps must be non-negative");
    switch (method) {
        case DdMethod::Lp:
            if (!g.is_polytope())
                throw ValidationError("LP directional derivative requires a polytope gauge");
            return dd_lp(g, x, y, eps);
        case DdMethod::SlopeMin:
            return dd_slope(g, x, y, eps);
        case DdMethod::Auto:
            break;
    }
    if (g.is_polytope()) return dd_lp(g, x, y, eps);
    // ellipsoid: the gradient pairing is exact at eps = 0
    if (eps <= 1e-13 * (1.0 + g.eval(x)) && norm2(x) > 0.0)
        return dot(ellipsoid_gradient(g, x), y);
    return dd_slope(g, x, y, eps);
}

SubdifferentialOracle::SubdifferentialOracle(Gauge g, Vec x, double eps, double weight)
    : gauge_(std::move(g)), x_(std::move(x)), eps_(eps), weight_(weight) {
    require_dim(x_, gauge_.dim(), "subdifferential base point");
    if (eps_ < 0.0) throw ValidationError("relaxation eps must be non-negative");
    if (weight_ < 0.0) throw ValidationError("oracle weight must be non-negative");
}

double SubdifferentialOracle::support(const Vec& u) const {
    if (weight_ == 0.0) return 0.0;
    return weight_ * directional_derivative(gauge_, x_, u, eps_);
}

Vec SubdifferentialOracle::extreme_point(const Vec& u) const {
    require_dim(u, gauge_.dim(), "extreme point direction");
    if (weight_ == 0.0) return zeros(gauge_.dim());
    return scaled(extreme_point_impl(gauge_, x_, eps_, u), weight_);
}

SubdifferentialOracle subdifferential(const Gauge& g, const Vec& x, double eps) {
    return SubdifferentialOracle(g, x, eps);
}

LinearProgram subdifferential_region(const Gauge& g, const Vec& x, double eps) {
    require_dim(x, g.dim(), "subdifferential base point");
    if (eps < 0.0) throw ValidationError("relaxation eps must be non-negative");
    if (!g.is_polytope())
        throw ValidationError("subdifferential_region: requires a polytope gauge");
    const double eps_base = eps / g.scale();
    if (g.kind() == GaugeKind::PolytopeH) return h_weight_region(g, x, eps_base);
    return v_functional_region(g, x, eps_base);
}

Vec subdifferential_point_from_region(const Gauge& g, const Vec& region_vars) {
    if (!g.is_polytope())
        throw ValidationError("subdifferential_point_from_region: requires a polytope gauge");
    if (g.kind() == GaugeKind::PolytopeV) return scaled(region_vars, g.scale());
    const Mat& a = g.normals();
    if (region_vars.size() != a.size())
        throw ValidationError("subdifferential region variables: width mismatch");
    Vec xs = zeros(g.dim());
    for (std::size_t i = 0; i < a.size(); ++i) xs = axpy(region_vars[i], a[i], xs);
    return scaled(xs, g.scale());
}

std::optional<Vec> gateaux_gradient(const Gauge& g, const Vec& x, double tol) {
    require_dim(x, g.dim(), "gradient base point");
    if (norm2(x) == 0.0)
        throw ValidationError("gateaux gradient is undefined at the origin "
                              "(the subdifferential is the whole polar ball)");
    if (g.kind() == GaugeKind::Ellipsoid) return ellipsoid_gradient(g, x);
    const double scale = 1.0 + g.eval(x);
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Vec e = unit(g.dim(), k);
        const double width = directional_derivative(g, x, e, 0.0, DdMethod::Lp) +
                             directional_derivative(g, x, negated(e), 0.0, DdMethod::Lp);
        if (width > tol * scale) return std::nullopt;
    }
    return extreme_point_impl(g, x, 0.0, unit(g.dim(), 0));
}

}  // namespace minkspace
