#pragma once

#include <optional>
#include <vector>

#include "minkspace/subdifferential.hpp"

namespace minkspace {

// Compact interval of admissible parameters for an orthogonality query,
// optionally with dual witnesses at the endpoints.
struct AlphaInterval {
    double lo = 0.0;
    double hi = 0.0;
    std::optional<Vec> cert_lo;
    std::optional<Vec> cert_hi;
    double width() const { return hi - lo; }
};

// Weight function for duality mappings, with its antiderivative in closed form.
struct Weight {
    enum class Kind { ConstantOne, Identity, Power };
    Kind kind = Kind::ConstantOne;
    double exponent = 1.0;

    double phi(double t) const;
    double psi(double t) const;  // integral of phi from 0 to t

    static Weight constant_one() { return {Kind::ConstantOne, 1.0}; }
    static Weight identity() { return {Kind::Identity, 1.0}; }
    static Weight power(double p);
};

// min_lambda gamma(x + lambda y) + eps - gamma(x); x is eps-Birkhoff
// orthogonal to y exactly when this is >= 0 (up to tolerance).
double birkhoff_margin(const Gauge& g, const Vec& x, const Vec& y, double eps);

// gamma(x) <= gamma(x + lambda y) + eps for all lambda, by 1D convex
// minimization over the subadditivity bracket.
bool birkhoff_test(const Gauge& g, const Vec& x, const Vec& y, double eps, double tol = 1e-9);

struct DualOrthogonality {
    bool orthogonal = false;
    std::optional<Vec> certificate;  // annihilating functional in the eps-subdifferential
};

// Dual route: x is eps-Birkhoff orthogonal to y iff some x* in the
// eps-subdifferential at x annihilates y, i.e. the value interval
// [-gamma'_eps(x;-y), gamma'_eps(x;y)] contains 0. Requires 0 <= eps < gamma(x).
DualOrthogonality birkhoff_dual_test(const Gauge& g, const Vec& x, const Vec& y, double eps,
                                     double tol = 1e-9);

enum class IntervalMethod { Auto, LinearFractional, Bisection };

// The compact interval {alpha : x  eps-Birkhoff orthogonal to alpha x + y}.
// Polytopes use the linear-fractional route (extrema of -<x*,y>/<x*,x> over
// the eps-subdifferential); smooth gauges at eps = 0 use the gradient closed
// form; otherwise outer bisection on the predicate. Requires x != 0 and
// 0 <= eps < gamma(x).
AlphaInterval right_alpha_interval(const Gauge& g, const Vec& x, const Vec& y, double eps,
                                   IntervalMethod method = IntervalMethod::Auto);

// The compact interval {alpha : gamma(alpha x + y) <= min_l gamma(l x + y) + eps}
// of left-orthogonality parameters, i.e. (alpha x + y) eps-Birkhoff orthogonal
// to x. Requires x != 0.
AlphaInterval left_alpha_interval(const Gauge& g, const Vec& x, const Vec& y, double eps,
                                  double tol = 1e-9);

// Duality mapping J_phi gamma(x) = phi(gamma(x)) * subdifferential(x), as a
// scaled oracle. At x = 0 the weight is phi(0) (the literal definition).
SubdifferentialOracle duality_map(const Gauge& g, const Vec& x, const Weight& w);

// superior / inferior semi-inner products (one-sided derivatives of gamma^2/2)
double semi_inner_superior(const Gauge& g, const Vec& y, const Vec& x);
double semi_inner_inferior(const Gauge& g, const Vec& y, const Vec& x);

// y isosceles orthogonal to x: gamma(y+x) = gamma(y-x)
bool isosceles_test(const Gauge& g, const Vec& y, const Vec& x, double tol = 1e-9);

// f(alpha) = gamma(alpha x + y + x) - gamma(alpha x + y - x); non-decreasing,
// with limits -2 gamma(-x) and +2 gamma(x).
double isosceles_offset(const Gauge& g, const Vec& x, const Vec& y, double alpha);

// The compact interval {alpha : (alpha x + y) isosceles orthogonal to x},
// reported as the maximal interval where |f| <= ftol, endpoints at bisection
// resolution atol. Requires x != 0.
AlphaInterval isosceles_alpha_interval(const Gauge& g, const Vec& x, const Vec& y,
                                       double ftol = 1e-12, double atol = 1e-10);

// Scans [-bound, bound] for parameters alpha with x isosceles orthogonal to
// (alpha x + y); sign changes are refined by bisection. May be empty: whether
// a root always exists is open.
std::vector<double> isosceles_right_existence_search(const Gauge& g, const Vec& x, const Vec& y,
                                                     double bound, int samples = 512);

}  // namespace minkspace
