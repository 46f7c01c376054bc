#pragma once

#include <array>

#include "minkspace/orthogonality.hpp"

namespace minkspace {

struct SmoothnessWitness {
    Vec direction;      // boundary direction with several supporting functionals
    Vec subgradient_a;  // two distinct subgradients at it
    Vec subgradient_b;
};

struct SmoothnessReport {
    bool smooth = false;
    std::optional<SmoothnessWitness> witness;
};

// Smooth iff the gauge is Gateaux differentiable away from 0. Polytope gauges
// report a unit-ball vertex with two active functionals; ellipsoids are smooth.
SmoothnessReport smoothness_check(const Gauge& g);

struct RotundityWitness {
    Vec p, q;  // distinct boundary points whose whole segment stays on the boundary
};

struct RotundityReport {
    bool rotund = false;
    std::optional<RotundityWitness> witness;
};

RotundityReport rotundity_check(const Gauge& g);

// Cross-section of the unit sphere with the plane span{axis_s, axis_t} in
// plane coordinates (s, t); optionally clipped to the half-flat t >= 0.
// Polytopes give the exact boundary polygon, ellipsoids a sampled arc.
struct Section2D {
    Vec axis_s, axis_t;
    std::vector<std::array<double, 2>> boundary;  // counterclockwise
    bool polygonal = false;
    bool clipped = false;
};

Section2D section2d(const Gauge& g, const Vec& x, const Vec& y, bool clip = true,
                    int samples = 720);

// Longest boundary segment of the section parallel to the s-axis, measured as
// gamma of the positively-oriented edge vector; 0 when there is none. The
// closing chord of a clipped section is not part of the sphere and is skipped.
double max_parallel_segment(const Section2D& sec, const Gauge& g, const Vec& x);

// M_y(x) <= 2 gamma(x) / gamma(y): when true, the bisector of -x, x meets the
// line y + R x in exactly one point.
bool unique_bisector_guarantee(const Gauge& g, const Vec& x, const Vec& y, double tol = 1e-9);

struct BisectorSample {
    Vec direction;
    AlphaInterval interval;
    Vec point_lo, point_hi;  // alpha_lo x + y and alpha_hi x + y
};

// Bisector of -x and x sampled along the given directions, in input order.
std::vector<BisectorSample> bisector_sample(const Gauge& g, const Vec& x,
                                            const std::vector<Vec>& directions);

// C(x, x*) = x + {y : <x*, y> = gamma(y)}, the translate of the union of rays
// through the exposed face of the unit ball at x*.
struct Cone {
    Vec apex;
    Vec functional;  // polar-normalized
};

Cone make_cone(const Gauge& g, Vec apex, Vec functional);
bool cone_membership(const Gauge& g, const Cone& cone, const Vec& z, double tol = 1e-9);

struct ReversalReport {
    int samples = 0;
    double max_slack_forward = 0.0;  // c(t) Birkhoff-orthogonal to c'(t;1) under gamma
    double max_slack_rotated = 0.0;  // c'(t;1) orthogonal to c(t) under polar-after-rotation
    double max_slack() const {
        return max_slack_forward > max_slack_rotated ? max_slack_forward : max_slack_rotated;
    }
};

// 2D only: walks the unit sphere (polytopes: vertices and edge midpoints;
// ellipsoids: `samples` uniform angles) with forward tangents and reports the
// worst Birkhoff violation of both orthogonality relations.
ReversalReport boundary_reversal_check_2d(const Gauge& g, int samples = 720);

}  // namespace minkspace
