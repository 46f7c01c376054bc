#pragma once

#include <optional>

#include "minkspace/gauge.hpp"

namespace minkspace {

// Auto follows the backend: H-polytopes solve the support LP over the facet
// simplex, the other backends minimize the slope function
// lambda -> (gamma(x + lambda y) - gamma(x) + eps) / lambda.
// Lp is available for both polytope representations, SlopeMin everywhere.
enum class DdMethod { Auto, Lp, SlopeMin };

// gamma'_eps(x; y) = inf_{lambda>0} (gamma(x+lambda y) - gamma(x) + eps)/lambda
double directional_derivative(const Gauge& g, const Vec& x, const Vec& y, double eps,
                              DdMethod method = DdMethod::Auto);

// The eps-subdifferential of the gauge at x, represented by its support
// function and an extreme-point extractor. For x = 0 this is the polar unit
// ball, independently of eps. A weight factor w represents the dilated set
// w * subdifferential (used by duality mappings).
class SubdifferentialOracle {
public:
    SubdifferentialOracle(Gauge g, Vec x, double eps, double weight = 1.0);

    // support(u) = w * gamma'_eps(x; u)
    double support(const Vec& u) const;
    // a maximizer of <., u> over the represented set
    Vec extreme_point(const Vec& u) const;

    const Gauge& gauge() const { return gauge_; }
    const Vec& base_point() const { return x_; }
    double relaxation() const { return eps_; }
    double weight_factor() const { return weight_; }

private:
    Gauge gauge_;
    Vec x_;
    double eps_;
    double weight_;
};

SubdifferentialOracle subdifferential(const Gauge& g, const Vec& x, double eps);

// The unique subgradient at x != 0 when the subdifferential is a singleton
// (probed along the coordinate directions), empty otherwise.
std::optional<Vec> gateaux_gradient(const Gauge& g, const Vec& x, double tol = 1e-8);

// Polytope subdifferentials are polytopes themselves; these expose the
// feasible region in its natural LP parametrization (facet weights for
// H-polytopes, functional coordinates for V-polytopes) together with the map
// from region variables to the functional x*. Base-gauge normalization; the
// map applies the gauge scale.
LinearProgram subdifferential_region(const Gauge& g, const Vec& x, double eps);
Vec subdifferential_point_from_region(const Gauge& g, const Vec& region_vars);

}  // namespace minkspace
