#pragma once

#include "minkspace/orthogonality.hpp"

namespace minkspace {

// Linear subspace given by an ordered basis; validated for independence.
class Subspace {
public:
    explicit Subspace(Mat basis);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return basis_[0].size(); }
    const Mat& basis() const { return basis_; }
    const Mat& orthonormal_basis() const { return ortho_; }

    Vec from_coords(const Vec& c) const;        // sum c_j basis_j
    Vec project(const Vec& x) const;            // Euclidean projection onto the subspace
    bool contains(const Vec& x, double tol = 1e-8) const;

private:
    Mat basis_;
    Mat ortho_;
};

struct BestApproxResult {
    Vec point;        // an eps-best approximation (a 0-best one, so valid for every eps)
    double value;     // gamma(point - y)
    Vec certificate;  // x* with gamma_polar(x*) = 1, x* ⟂ U, x* in the eps-subdifferential at point - y
};

// Minimizer of gamma(u - y) over u in U plus the separating certificate.
// Polytope backends solve the epigraph LP (lexicographically smallest optimal
// vertex); the smooth backend runs Armijo descent polished by Newton on the
// stationarity system. Requires y outside U and dim U < d.
BestApproxResult best_approximation(const Gauge& g, const Subspace& u, const Vec& y, double eps);

// x in U is an eps-best approximation of y iff gamma(x-y) is within eps of the
// 0-best value.
bool best_approx_membership(const Gauge& g, const Subspace& u, const Vec& y, double eps,
                            const Vec& x, double tol = 1e-9);

// Sampled necessary check of eps-best co-approximation: gamma(x-z) <=
// gamma(y-z) + eps on a deterministic per-axis grid of the U-ball of radius
// 8 max{gamma(y), gamma(-y)} with `samples` points per axis. A semi-decision:
// true means no violation was sampled.
bool coapprox_membership_sampled(const Gauge& g, const Subspace& u, const Vec& y, double eps,
                                 const Vec& x, int samples, double tol = 1e-9);

// Sufficient condition: z eps-Birkhoff orthogonal to (y - x) for z in U,
// checked on the basis directions and a deterministic direction grid of the
// unit sphere of U (for eps > 0, at several radii of a bounded ball). True
// only when every sampled condition holds.
bool coapprox_sufficient_test(const Gauge& g, const Subspace& u, const Vec& y, const Vec& x,
                              double eps, int samples = 64, double tol = 1e-9);

// max <x*, w> over {gamma_polar(x*) <= 1} ∩ U-perp (polytope gauges): the
// largest value an annihilating certificate can reach on w.
double polar_section_support(const Gauge& g, const Subspace& u, const Vec& w);

}  // namespace minkspace
