#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minkspace/lp.hpp"
#include "minkspace/vec.hpp"

namespace minkspace {

enum class GaugeKind { PolytopeH, PolytopeV, Ellipsoid };

// A gauge on R^d given by one of three unit-ball families, times a positive
// scale factor kappa:
//   PolytopeH  max_i <a_i, x>          (facet inequalities <a_i, x> <= 1)
//   PolytopeV  Minkowski functional of conv{v_i}
//   Ellipsoid  Minkowski functional of {z : (z-c)' Q (z-c) <= 1}
// Descriptors are validated at construction and immutable afterwards.
class Gauge {
public:
    static Gauge polytope_h(Mat normals, double scale = 1.0);
    static Gauge polytope_v(Mat vertices, double scale = 1.0);
    static Gauge ellipsoid(Mat q, Vec center, double scale = 1.0);

    GaugeKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    double scale() const { return scale_; }

    const Mat& normals() const;   // PolytopeH
    const Mat& vertices() const;  // PolytopeV
    const Mat& q() const;         // Ellipsoid
    const Mat& q_inverse() const; // Ellipsoid
    const Vec& center() const;    // Ellipsoid

    // gauge value kappa * gamma_base(x)
    double eval(const Vec& x) const;
    // polar gauge value; the polar of kappa*gamma is gamma_polar / kappa
    double polar(const Vec& xstar) const;

    // gamma_reversed(x) = gamma(-x)
    Gauge reversed() const;
    Gauge rescaled(double kappa) const;

    // a maximizer of <u, .> over the unit ball (deterministic for polytopes)
    Vec support_point(const Vec& u) const;

    bool is_polytope() const { return kind_ != GaugeKind::Ellipsoid; }

private:
    Gauge() = default;
    GaugeKind kind_ = GaugeKind::PolytopeH;
    std::size_t dim_ = 0;
    double scale_ = 1.0;
    Mat data_;     // normals / vertices / Q
    Vec center_;   // ellipsoid only
    Mat q_inv_;    // ellipsoid only
};

// Descriptor of the polar gauge. PolytopeH(a_i, k) -> PolytopeV(a_i, 1/k),
// PolytopeV(v_i, k) -> PolytopeH(v_i, 1/k), and the shifted-ellipsoid polar is
// again a shifted ellipsoid.
Gauge polar_gauge(const Gauge& g);

// Vertices of the unit ball {x : gauge(x) <= 1} for polytope gauges.
// Sorted counterclockwise in 2D; enumeration order otherwise.
std::vector<Vec> unit_ball_vertices(const Gauge& g);

// Outer normals nu_k with unit ball {x : <nu_k, x> <= 1}, for polytope gauges.
std::vector<Vec> halfspace_normals(const Gauge& g);

// 2D only: gauge z -> polar(rot90(z)), the partially-reversing gauge.
Gauge rotated_polar_gauge_2d(const Gauge& g);

}  // namespace minkspace
