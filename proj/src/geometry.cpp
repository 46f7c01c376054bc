#include "minkspace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace minkspace {

namespace {

void require_geometry_dim(const Gauge& g) {
    if (g.dim() < 2) throw ValidationError("geometry diagnostics require dimension >= 2");
}

}  // namespace

SmoothnessReport smoothness_check(const Gauge& g) {
    require_geometry_dim(g);
    if (g.kind() == GaugeKind::Ellipsoid) return {true, std::nullopt};

    const std::vector<Vec> verts = unit_ball_vertices(g);
    for (const auto& v : verts) {
        const double scale = 1.0 + g.eval(v);
        for (std::size_t k = 0; k < g.dim(); ++k) {
            const Vec e = unit(g.dim(), k);
            const double width = directional_derivative(g, v, e, 0.0, DdMethod::Lp) +
                                 directional_derivative(g, v, negated(e), 0.0, DdMethod::Lp);
            if (width > 1e-7 * scale) {
                const SubdifferentialOracle oracle = subdifferential(g, v, 0.0);
                SmoothnessWitness w{v, oracle.extreme_point(negated(e)), oracle.extreme_point(e)};
                return {false, std::move(w)};
            }
        }
    }
    throw NumericalError("smoothness check: no vertex witness found on a polytope ball");
}

RotundityReport rotundity_check(const Gauge& g) {
    require_geometry_dim(g);
    if (g.kind() == GaugeKind::Ellipsoid) return {true, std::nullopt};

    const std::vector<Vec> verts = unit_ball_vertices(g);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const Vec mid = scaled(add(verts[i], verts[j]), 0.5);
            if (std::abs(g.eval(mid) - 1.0) > 1e-9) continue;
            const Vec q = add(scaled(verts[i], 0.25), scaled(verts[j], 0.75));
            if (std::abs(g.eval(q) - 1.0) > 1e-9) continue;
            return {false, RotundityWitness{mid, q}};
        }
    }
    throw NumericalError("rotundity check: no facet witness found on a polytope ball");
}

namespace {

using PlanePoint = std::array<double, 2>;

// Sutherland-Hodgman clip of a convex polygon by {p s + q t <= r}.
std::vector<PlanePoint> clip_halfplane(const std::vector<PlanePoint>& poly, double p, double q,
                                       double r) {
    std::vector<PlanePoint> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint& a = poly[i];
        const PlanePoint& b = poly[(i + 1) % n];
        const double fa = p * a[0] + q * a[1] - r;
        const double fb = p * b[0] + q * b[1] - r;
        const bool ina = fa <= 1e-12;
        const bool inb = fb <= 1e-12;
        if (ina) out.push_back(a);
        if (ina != inb) {
            const double t = fa / (fa - fb);
            out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
        }
    }
    return out;
}

void dedupe_and_orient(std::vector<PlanePoint>& poly) {
    std::vector<PlanePoint> clean;
    for (const auto& p : poly) {
        if (!clean.empty() && std::hypot(p[0] - clean.back()[0], p[1] - clean.back()[1]) <= 1e-12)
            continue;
        clean.push_back(p);
    }
    while (clean.size() > 1 &&
           std::hypot(clean.front()[0] - clean.back()[0], clean.front()[1] - clean.back()[1]) <=
               1e-12)
        clean.pop_back();
    double area2 = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        const auto& a = clean[i];
        const auto& b = clean[(i + 1) % clean.size()];
        area2 += a[0] * b[1] - b[0] * a[1];
    }
    if (area2 < 0.0) std::reverse(clean.begin(), clean.end());
    poly = std::move(clean);
}

}  // namespace

Section2D section2d(const Gauge& g, const Vec& x, const Vec& y, bool clip, int samples) {
    require_geometry_dim(g);
    require_dim(x, g.dim(), "section axis s");
    require_dim(y, g.dim(), "section axis t");
    const double xx = dot(x, x), xy = dot(x, y), yy = dot(y, y);
    if (xx * yy - xy * xy <= 1e-20 * (1.0 + xx) * (1.0 + yy))
        throw ValidationError("section: the axes must be linearly independent");

    Section2D sec;
    sec.axis_s = x;
    sec.axis_t = y;
    sec.clipped = clip;

    if (g.kind() == GaugeKind::Ellipsoid) {
        sec.polygonal = false;
        if (samples < 8) throw ValidationError("section: needs at least 8 samples");
        const double full = clip ? std::numbers::pi : 2.0 * std::numbers::pi;
        const int n = samples;
        for (int i = 0; i < n; ++i) {
            const double th = clip ? full * i / (n - 1) : full * i / n;
            const Vec u = add(scaled(x, std::cos(th)), scaled(y, std::sin(th)));
            const double r = g.eval(u);
            sec.boundary.push_back({std::cos(th) / r, std::sin(th) / r});
        }
        return sec;
    }

    sec.polygonal = true;
    // dual vectors inside span{x,y} give guaranteed |s|, |t| bounds
    const Mat gram{{xx, xy}, {xy, yy}};
    const Vec cs = solve_dense(gram, {1.0, 0.0});
    const Vec ct = solve_dense(gram, {0.0, 1.0});
    const Vec xi_s = add(scaled(x, cs[0]), scaled(y, cs[1]));
    const Vec xi_t = add(scaled(x, ct[0]), scaled(y, ct[1]));
    const double bs = 1.1 * std::max(g.polar(xi_s), g.polar(negated(xi_s))) + 0.1;
    const double bt = 1.1 * std::max(g.polar(xi_t), g.polar(negated(xi_t))) + 0.1;

    std::vector<PlanePoint> poly{{-bs, -bt}, {bs, -bt}, {bs, bt}, {-bs, bt}};
    for (const auto& nu : halfspace_normals(g)) {
        poly = clip_halfplane(poly, dot(nu, x), dot(nu, y), 1.0);
        if (poly.empty()) break;
    }
    if (clip && !poly.empty()) poly = clip_halfplane(poly, 0.0, -1.0, 0.0);
    dedupe_and_orient(poly);
    sec.boundary = std::move(poly);
    return sec;
}

double max_parallel_segment(const Section2D& sec, const Gauge& g, const Vec& x) {
    if (!sec.polygonal || sec.boundary.size() < 2) return 0.0;
    const double gx = g.eval(x);
    double best = 0.0;
    const std::size_t n = sec.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = sec.boundary[i];
        const auto& b = sec.boundary[(i + 1) % n];
        if (sec.clipped && std::abs(a[1]) <= 1e-9 && std::abs(b[1]) <= 1e-9)
            continue;  // closing chord, not part of the sphere
        const double ds = b[0] - a[0];
        const double dt = b[1] - a[1];
        const double len = std::hypot(ds, dt);
        if (len <= 1e-12 || std::abs(dt) > 1e-9 * len) continue;
        best = std::max(best, std::abs(ds) * gx);
    }
    return best;
}

bool unique_bisector_guarantee(const Gauge& g, const Vec& x, const Vec& y, double tol) {
    require_dim(x, g.dim(), "bisector x");
    require_dim(y, g.dim(), "bisector y");
    if (norm2(x) == 0.0 || norm2(y) == 0.0)
        throw ValidationError("bisector guarantee: requires x, y != 0");
    const double xx = dot(x, x), xy = dot(x, y), yy = dot(y, y);
    if (xx * yy - xy * xy <= 1e-20 * (1.0 + xx) * (1.0 + yy))
        return true;  // collinear: the intersection is the metric midpoint
    const Section2D sec = section2d(g, x, y, true);
    const double m = max_parallel_segment(sec, g, x);
    return m <= 2.0 * g.eval(x) / g.eval(y) + tol;
}

std::vector<BisectorSample> bisector_sample(const Gauge& g, const Vec& x,
                                            const std::vector<Vec>& directions) {
    require_dim(x, g.dim(), "bisector x");
    if (norm2(x) == 0.0) throw ValidationError("bisector: requires x != 0");
    std::vector<BisectorSample> out;
    out.reserve(directions.size());
    for (const auto& y : directions) {
        require_dim(y, g.dim(), "bisector direction");
        if (norm2(y) == 0.0) throw ValidationError("bisector: directions must be nonzero");
        AlphaInterval iv = isosceles_alpha_interval(g, x, y);
        BisectorSample s;
        s.direction = y;
        s.point_lo = axpy(iv.lo, x, y);
        s.point_hi = axpy(iv.hi, x, y);
        s.interval = std::move(iv);
        out.push_back(std::move(s));
    }
    return out;
}

Cone make_cone(const Gauge& g, Vec apex, Vec functional) {
    require_dim(apex, g.dim(), "cone apex");
    require_dim(functional, g.dim(), "cone functional");
    const double pe = g.polar(functional);
    if (!(pe > 1e-12)) throw ValidationError("cone functional must be nonzero");
    return {std::move(apex), scaled(functional, 1.0 / pe)};
}

bool cone_membership(const Gauge& g, const Cone& cone, const Vec& z, double tol) {
    require_dim(z, g.dim(), "cone membership point");
    if (std::abs(g.polar(cone.functional) - 1.0) > 1e-7)
        throw ValidationError("cone functional must be polar-normalized");
    const Vec diff = sub(z, cone.apex);
    const double gv = g.eval(diff);
    return std::abs(dot(cone.functional, diff) - gv) <= tol * (1.0 + gv);
}

ReversalReport boundary_reversal_check_2d(const Gauge& g, int samples) {
    if (g.dim() != 2) throw ValidationError("boundary reversal check requires dimension 2");

    std::vector<std::pair<Vec, Vec>> walk;  // (boundary point, forward tangent)
    if (g.is_polytope()) {
        const std::vector<Vec> verts = unit_ball_vertices(g);
        const std::size_t n = verts.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Vec& v = verts[k];
            const Vec& w = verts[(k + 1) % n];
            const Vec edge = sub(w, v);
            walk.emplace_back(v, edge);  // outgoing edge = right derivative at the vertex
            walk.emplace_back(scaled(add(v, w), 0.5), edge);
        }
    } else {
        if (samples < 8) throw ValidationError("boundary reversal check: needs at least 8 samples");
        for (int i = 0; i < samples; ++i) {
            const double th = 2.0 * std::numbers::pi * i / samples;
            const Vec u{std::cos(th), std::sin(th)};
            const Vec du{-std::sin(th), std::cos(th)};
            const double r = g.eval(u);
            const Vec grad = *gateaux_gradient(g, u);
            const double dr = dot(grad, du);
            const Vec c = scaled(u, 1.0 / r);
            const Vec tangent = sub(scaled(du, 1.0 / r), scaled(u, dr / (r * r)));
            walk.emplace_back(c, tangent);
        }
    }

    const Gauge reversed = rotated_polar_gauge_2d(g);
    ReversalReport rep;
    rep.samples = static_cast<int>(walk.size());
    for (const auto& [c, tangent] : walk) {
        rep.max_slack_forward =
            std::max(rep.max_slack_forward, -birkhoff_margin(g, c, tangent, 0.0));
        rep.max_slack_rotated =
            std::max(rep.max_slack_rotated, -birkhoff_margin(reversed, tangent, c, 0.0));
    }
    rep.max_slack_forward = std::max(rep.max_slack_forward, 0.0);
    rep.max_slack_rotated = std::max(rep.max_slack_rotated, 0.0);
    return rep;
}

}  // namespace minkspace
