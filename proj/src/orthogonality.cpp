#include "minkspace/orthogonality.hpp"

#include <algorithm>
#include <cmath>

namespace minkspace {

namespace {

// bracket outside which gamma(x + lambda y) exceeds gamma(x), by subadditivity
double birkhoff_bracket(const Gauge& g, const Vec& x, const Vec& y) {
    const double spread = g.eval(x) + g.eval(negated(x));
    const double dir = std::min(g.eval(y), g.eval(negated(y)));
    return spread / std::max(dir, 1e-300) + 1.0;
}

double right_alpha_inside_point(const Gauge& g, const Vec& x, const Vec& y, double eps) {
    const SubdifferentialOracle oracle = subdifferential(g, x, eps);
    const Vec p = oracle.extreme_point(x);
    return -dot(p, y) / dot(p, x);
}

}  // namespace

double Weight::phi(double t) const {
    switch (kind) {
        case Kind::ConstantOne:
            return 1.0;
        case Kind::Identity:
            return t;
        case Kind::Power:
            return std::pow(t, exponent);
    }
    return 0.0;
}

double Weight::psi(double t) const {
    switch (kind) {
        case Kind::ConstantOne:
            return t;
        case Kind::Identity:
            return 0.5 * t * t;
        case Kind::Power:
            return std::pow(t, exponent + 1.0) / (exponent + 1.0);
    }
    return 0.0;
}

Weight Weight::power(double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw ValidationError("weight exponent must be positive and finite");
    return {Kind::Power, p};
}

double birkhoff_margin(const Gauge& g, const Vec& x, const Vec& y, double eps) {
    require_dim(x, g.dim(), "birkhoff x");
    require_dim(y, g.dim(), "birkhoff y");
    if (eps < 0.0) throw ValidationError("relaxation eps must be non-negative");
    const double gx = g.eval(x);
    if (norm2(y) == 0.0) return eps;
    const double b = birkhoff_bracket(g, x, y);
    auto h = [&](double lam) { return g.eval(axpy(lam, y, x)); };
    Min1D m = golden_min(h, -b, b, 1e-10 * (1.0 + b));
    return std::min(m.value, gx) + eps - gx;  // h(0) = gamma(x) is always a candidate
}

bool birkhoff_test(const Gauge& g, const Vec& x, const Vec& y, double eps, double tol) {
    return birkhoff_margin(g, x, y, eps) >= -tol;
}

DualOrthogonality birkhoff_dual_test(const Gauge& g, const Vec& x, const Vec& y, double eps,
                                     double tol) {
    require_dim(x, g.dim(), "birkhoff x");
    require_dim(y, g.dim(), "birkhoff y");
    const double gx = g.eval(x);
    if (eps < 0.0 || eps >= gx)
        throw ValidationError("birkhoff_dual_test: requires 0 <= eps < gamma(x)");
    const SubdifferentialOracle oracle = subdifferential(g, x, eps);
    const double s_plus = oracle.support(y);
    const double s_minus = oracle.support(negated(y));
    DualOrthogonality out;
    out.orthogonal = s_plus >= -tol && s_minus >= -tol;
    if (!out.orthogonal) return out;

    const Vec p = oracle.extreme_point(y);
    const Vec q = oracle.extreme_point(negated(y));
    const double vp = dot(p, y);
    const double vq = dot(q, y);
    if (vp - vq <= 1e-15) {
        out.certificate = p;
    } else {
        const double theta = std::clamp(-vq / (vp - vq), 0.0, 1.0);
        out.certificate = axpy(theta, sub(p, q), q);
    }
    return out;
}

namespace {

AlphaInterval right_interval_linear_fractional(const Gauge& g, const Vec& x, const Vec& y,
                                               double eps) {
    LinearProgram region = subdifferential_region(g, x, eps);
    AffineFunctional num, den;
    if (g.kind() == GaugeKind::PolytopeH) {
        const Mat& a = g.normals();
        num.coeffs.resize(a.size());
        den.coeffs.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            num.coeffs[i] = -dot(a[i], y);
            den.coeffs[i] = dot(a[i], x);
        }
    } else {
        num.coeffs = negated(y);
        den.coeffs = x;
    }
    FractionalExtrema fr = solve_linear_fractional(num, den, region);
    AlphaInterval out;
    out.lo = fr.min_value;
    out.hi = fr.max_value;
    return out;
}

AlphaInterval right_interval_bisection(const Gauge& g, const Vec& x, const Vec& y, double eps) {
    const double bound = std::max(g.eval(y), g.eval(negated(y))) / (g.eval(x) - eps) + 1.0;
    const double alpha0 = right_alpha_inside_point(g, x, y, eps);
    auto pred = [&](double alpha) { return birkhoff_test(g, x, axpy(alpha, x, y), eps); };
    if (!pred(alpha0))
        throw NumericalError("right alpha interval: interior point predicate failed");
    const double xtol = 1e-10 * (1.0 + bound);
    AlphaInterval out;
    out.lo = bisect_transition(pred, -bound, alpha0, xtol);
    out.hi = bisect_transition(pred, bound, alpha0, xtol);
    return out;
}

}  // namespace

AlphaInterval right_alpha_interval(const Gauge& g, const Vec& x, const Vec& y, double eps,
                                   IntervalMethod method) {
    require_dim(x, g.dim(), "interval x");
    require_dim(y, g.dim(), "interval y");
    if (norm2(x) == 0.0) throw ValidationError("right alpha interval: requires x != 0");
    const double gx = g.eval(x);
    if (eps < 0.0 || eps >= gx)
        throw ValidationError("right alpha interval: requires 0 <= eps < gamma(x)");

    AlphaInterval out;
    bool done = false;
    if (method == IntervalMethod::LinearFractional ||
        (method == IntervalMethod::Auto && g.is_polytope())) {
        if (!g.is_polytope())
            throw ValidationError("linear-fractional interval requires a polytope gauge");
        out = right_interval_linear_fractional(g, x, y, eps);
        done = true;
    }
    if (!done && method == IntervalMethod::Auto && g.kind() == GaugeKind::Ellipsoid &&
        eps <= 1e-13 * (1.0 + gx)) {
        const Vec grad = *gateaux_gradient(g, x);
        const double alpha = -dot(grad, y) / dot(grad, x);
        out.lo = out.hi = alpha;
        out.cert_lo = out.cert_hi = grad;
        return out;
    }
    if (!done) out = right_interval_bisection(g, x, y, eps);

    const SubdifferentialOracle oracle = subdifferential(g, x, eps);
    out.cert_lo = oracle.extreme_point(axpy(out.lo, x, y));
    out.cert_hi = oracle.extreme_point(negated(axpy(out.hi, x, y)));
    return out;
}

AlphaInterval left_alpha_interval(const Gauge& g, const Vec& x, const Vec& y, double eps,
                                  double tol) {
    require_dim(x, g.dim(), "interval x");
    require_dim(y, g.dim(), "interval y");
    if (norm2(x) == 0.0) throw ValidationError("left alpha interval: requires x != 0");
    if (eps < 0.0) throw ValidationError("relaxation eps must be non-negative");

    // collinear line through the origin: closed form
    const double t = dot(y, x) / dot(x, x);
    if (norm2(sub(y, scaled(x, t))) <= 1e-12 * (1.0 + norm2(y))) {
        AlphaInterval out;
        out.lo = -t - eps / g.eval(negated(x));
        out.hi = -t + eps / g.eval(x);
        return out;
    }

    auto value = [&](double a) { return g.eval(axpy(a, x, y)); };
    double bound = (g.eval(y) + g.eval(negated(y))) /
                       std::min(g.eval(x), g.eval(negated(x))) +
                   1.0;

    double arg_min = 0.0, val_min = 0.0;
    if (g.kind() == GaugeKind::Ellipsoid) {
        auto deriv_pos = [&](double a) {
            return dot(*gateaux_gradient(g, axpy(a, x, y)), x) > 0.0;
        };
        double lo = -bound, hi = bound;
        for (int it = 0; it < 64 && deriv_pos(lo); ++it) lo *= 2.0;
        for (int it = 0; it < 64 && !deriv_pos(hi); ++it) hi *= 2.0;
        arg_min = bisect_transition(deriv_pos, lo, hi, 1e-12 * (1.0 + bound));
        val_min = value(arg_min);
        if (eps <= 1e-15 * (1.0 + val_min)) {
            AlphaInterval out;
            out.lo = out.hi = arg_min;
            return out;
        }
    } else {
        Min1D m = golden_min(value, -bound, bound, 1e-10 * (1.0 + bound));
        arg_min = m.arg;
        val_min = m.value;
    }

    const double level = val_min + eps + tol;
    auto inside = [&](double a) { return value(a) <= level; };
    double lo_out = arg_min - std::max(1.0, bound);
    for (int it = 0; it < 64 && inside(lo_out); ++it) lo_out -= bound;
    double hi_out = arg_min + std::max(1.0, bound);
    for (int it = 0; it < 64 && inside(hi_out); ++it) hi_out += bound;

    AlphaInterval out;
    const double xtol = 1e-10 * (1.0 + bound);
    out.lo = bisect_transition(inside, lo_out, arg_min, xtol);
    out.hi = bisect_transition(inside, hi_out, arg_min, xtol);
    return out;
}

SubdifferentialOracle duality_map(const Gauge& g, const Vec& x, const Weight& w) {
    require_dim(x, g.dim(), "duality map base point");
    const double gx = g.eval(x);
    if (norm2(x) == 0.0) return SubdifferentialOracle(g, zeros(g.dim()), 0.0, w.phi(0.0));
    return SubdifferentialOracle(g, x, 0.0, w.phi(gx));
}

double semi_inner_superior(const Gauge& g, const Vec& y, const Vec& x) {
    return g.eval(x) * directional_derivative(g, x, y, 0.0);
}

double semi_inner_inferior(const Gauge& g, const Vec& y, const Vec& x) {
    return -g.eval(x) * directional_derivative(g, x, negated(y), 0.0);
}

bool isosceles_test(const Gauge& g, const Vec& y, const Vec& x, double tol) {
    require_dim(x, g.dim(), "isosceles x");
    require_dim(y, g.dim(), "isosceles y");
    return std::abs(g.eval(add(y, x)) - g.eval(sub(y, x))) <= tol;
}

double isosceles_offset(const Gauge& g, const Vec& x, const Vec& y, double alpha) {
    const Vec base = axpy(alpha, x, y);
    return g.eval(add(base, x)) - g.eval(sub(base, x));
}

AlphaInterval isosceles_alpha_interval(const Gauge& g, const Vec& x, const Vec& y, double ftol,
                                       double atol) {
    require_dim(x, g.dim(), "interval x");
    require_dim(y, g.dim(), "interval y");
    if (norm2(x) == 0.0) throw ValidationError("isosceles alpha interval: requires x != 0");

    auto f = [&](double a) { return isosceles_offset(g, x, y, a); };
    // f is non-decreasing with limits -2 gamma(-x) and +2 gamma(x); expand
    // geometrically from |alpha| = 1 until both signs are bracketed
    double hi = 1.0;
    int guard = 0;
    while (f(hi) <= ftol) {
        hi *= 2.0;
        if (++guard > 300) throw NumericalError("isosceles bracket expansion failed (upper)");
    }
    double lo = -1.0;
    guard = 0;
    while (f(lo) >= -ftol) {
        lo *= 2.0;
        if (++guard > 300) throw NumericalError("isosceles bracket expansion failed (lower)");
    }

    const double xtol = atol * (1.0 + std::max(std::abs(lo), hi));
    AlphaInterval out;
    out.lo = bisect_transition([&](double a) { return f(a) >= -ftol; }, lo, hi, xtol);
    out.hi = bisect_transition([&](double a) { return f(a) <= ftol; }, hi, lo, xtol);
    if (out.lo > out.hi) out.lo = out.hi = 0.5 * (out.lo + out.hi);
    return out;
}

std::vector<double> isosceles_right_existence_search(const Gauge& g, const Vec& x, const Vec& y,
                                                     double bound, int samples) {
    require_dim(x, g.dim(), "search x");
    require_dim(y, g.dim(), "search y");
    if (norm2(x) == 0.0) throw ValidationError("isosceles right search: requires x != 0");
    if (!(bound > 0.0)) throw ValidationError("isosceles right search: bound must be positive");
    if (samples < 16) throw ValidationError("isosceles right search: needs at least 16 samples");

    auto r = [&](double a) {
        const Vec z = axpy(a, x, y);
        return g.eval(add(x, z)) - g.eval(sub(x, z));
    };
    std::vector<double> roots;
    double prev_a = -bound, prev_v = r(prev_a);
    for (int k = 1; k < samples; ++k) {
        const double a = -bound + 2.0 * bound * k / (samples - 1);
        const double v = r(a);
        if (std::abs(prev_v) <= 1e-12) {
            roots.push_back(prev_a);
        } else if (prev_v * v < 0.0) {
            double lo = prev_a, hi = a, flo = prev_v;
            for (int it = 0; it < 200 && hi - lo > 1e-10 * (1.0 + bound); ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = r(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                } else if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_a = a;
        prev_v = v;
    }
    if (std::abs(prev_v) <= 1e-12) roots.push_back(prev_a);
    // dedupe nearby roots from adjacent cells
    std::vector<double> out;
    for (double root : roots)
        if (out.empty() || root - out.back() > 1e-8 * (1.0 + bound)) out.push_back(root);
    return out;
}

}  // namespace minkspace
