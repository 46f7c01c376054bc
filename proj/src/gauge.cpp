#include "minkspace/gauge.hpp"

#include <algorithm>
#include <cmath>

namespace minkspace {

namespace {

void require_matrix(const Mat& m, const char* label) {
    if (m.empty()) throw ValidationError(std::string(label) + ": must be non-empty");
    const std::size_t d = m[0].size();
    if (d == 0) throw ValidationError(std::string(label) + ": rows must be non-empty");
    for (const auto& row : m) {
        if (row.size() != d)
            throw ValidationError(std::string(label) + ": rows must have equal length");
        if (!all_finite(row))
            throw ValidationError(std::string(label) + ": entries must be finite");
    }
}

// 0 lies in the interior of conv(points) iff no u != 0 has <p_i, u> <= 0 for
// all i. Probed with 2d small LPs maximizing +-u_j over that cone cut to a box.
bool origin_interior_to_hull(const Mat& points) {
    const std::size_t d = points[0].size();
    LinearProgram lp;
    lp.objective = zeros(d);
    lp.nonneg.assign(d, false);
    for (const auto& p : points) lp.add_row(p, Rel::LE, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        lp.add_row(unit(d, j), Rel::LE, 1.0);
        lp.add_row(negated(unit(d, j)), Rel::LE, 1.0);
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (double sgn : {1.0, -1.0}) {
            lp.objective = scaled(unit(d, j), sgn);
            lp.sense = Sense::Maximize;
            LpResult r = solve_lp_raw(lp);
            if (!r.optimal()) throw NumericalError("origin-interior check failed to solve");
            if (r.value > 1e-9) return false;
        }
    }
    return true;
}

double ellipsoid_gauge_base(const Mat& q, const Vec& c, const Vec& x) {
    const double a = quad(q, x, x);
    if (a <= 0.0) return 0.0;  // x == 0
    const double beta = quad(q, c, x);
    const double c0 = quad(q, c, c) - 1.0;
    // positive root of t^2 a - 2 t beta + c0 = 0
    const double t = (beta + std::sqrt(beta * beta - a * c0)) / a;
    return 1.0 / t;
}

}  // namespace

Gauge Gauge::polytope_h(Mat normals, double scale) {
    require_matrix(normals, "polytope_h normals");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ValidationError("gauge scale must be positive and finite");
    if (!origin_interior_to_hull(normals))
        throw ValidationError(
            "polytope_h: normals must positively span the space (max_i <a_i,x> > 0 for x != 0)");
    Gauge g;
    g.kind_ = GaugeKind::PolytopeH;
    g.dim_ = normals[0].size();
    g.scale_ = scale;
    g.data_ = std::move(normals);
    return g;
}

Gauge Gauge::polytope_v(Mat vertices, double scale) {
    require_matrix(vertices, "polytope_v vertices");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ValidationError("gauge scale must be positive and finite");
    if (!origin_interior_to_hull(vertices))
        throw ValidationError(
            "polytope_v: the origin must lie in the interior of the vertex hull");
    Gauge g;
    g.kind_ = GaugeKind::PolytopeV;
    g.dim_ = vertices[0].size();
    g.scale_ = scale;
    g.data_ = std::move(vertices);
    return g;
}

Gauge Gauge::ellipsoid(Mat q, Vec center, double scale) {
    require_matrix(q, "ellipsoid Q");
    const std::size_t d = q.size();
    if (q[0].size() != d) throw ValidationError("ellipsoid Q: must be square");
    require_dim(center, d, "ellipsoid center");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ValidationError("gauge scale must be positive and finite");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(q[i][j] - q[j][i]) > 1e-9 * (1.0 + std::abs(q[i][j])))
                throw ValidationError("ellipsoid Q: must be symmetric");
            const double s = 0.5 * (q[i][j] + q[j][i]);
            q[i][j] = q[j][i] = s;
        }
    try {
        (void)cholesky(q);
    } catch (const NumericalError&) {
        throw ValidationError("ellipsoid Q: must be positive definite");
    }
    if (quad(q, center, center) >= 1.0 - 1e-12)
        throw ValidationError("ellipsoid: the origin must be interior (c'Qc < 1)");
    Gauge g;
    g.kind_ = GaugeKind::Ellipsoid;
    g.dim_ = d;
    g.scale_ = scale;
    g.q_inv_ = mat_inverse(q);
    g.data_ = std::move(q);
    g.center_ = std::move(center);
    return g;
}

const Mat& Gauge::normals() const {
    if (kind_ != GaugeKind::PolytopeH) throw ValidationError("gauge: not an H-polytope");
    return data_;
}
const Mat& Gauge::vertices() const {
    if (kind_ != GaugeKind::PolytopeV) throw ValidationError("gauge: not a V-polytope");
    return data_;
}
const Mat& Gauge::q() const {
    if (kind_ != GaugeKind::Ellipsoid) throw ValidationError("gauge: not an ellipsoid");
    return data_;
}
const Mat& Gauge::q_inverse() const {
    if (kind_ != GaugeKind::Ellipsoid) throw ValidationError("gauge: not an ellipsoid");
    return q_inv_;
}
const Vec& Gauge::center() const {
    if (kind_ != GaugeKind::Ellipsoid) throw ValidationError("gauge: not an ellipsoid");
    return center_;
}

double Gauge::eval(const Vec& x) const {
    require_dim(x, dim_, "gauge argument");
    switch (kind_) {
        case GaugeKind::PolytopeH: {
            double m = 0.0;
            bool first = true;
            for (const auto& a : data_) {
                const double v = dot(a, x);
                if (first || v > m) m = v;
                first = false;
            }
            return scale_ * std::max(m, 0.0);
        }
        case GaugeKind::PolytopeV: {
            const double n = norm2(x);
            if (n == 0.0) return 0.0;
            // min sum(u) s.t. sum u_i v_i = x/|x|, u >= 0; homogeneity restores the scale
            const std::size_t m = data_.size();
            LinearProgram lp;
            lp.objective.assign(m, 1.0);
            lp.nonneg.assign(m, true);
            for (std::size_t coord = 0; coord < dim_; ++coord) {
                Vec row(m);
                for (std::size_t i = 0; i < m; ++i) row[i] = data_[i][coord];
                lp.add_row(std::move(row), Rel::EQ, x[coord] / n);
            }
            LpResult r = solve_lp_raw(lp);
            if (!r.optimal()) throw NumericalError("polytope_v gauge evaluation LP failed");
            return scale_ * n * r.value;
        }
        case GaugeKind::Ellipsoid:
            return scale_ * ellipsoid_gauge_base(data_, center_, x);
    }
    return 0.0;
}

double Gauge::polar(const Vec& xstar) const {
    require_dim(xstar, dim_, "polar gauge argument");
    switch (kind_) {
        case GaugeKind::PolytopeH: {
            // support of the base unit ball: max <xstar, x> s.t. <a_i, x> <= 1
            const double n = norm2(xstar);
            if (n == 0.0) return 0.0;
            LinearProgram lp;
            lp.sense = Sense::Maximize;
            lp.objective = scaled(xstar, 1.0 / n);
            lp.nonneg.assign(dim_, false);
            for (const auto& a : data_) lp.add_row(a, Rel::LE, 1.0);
            LpResult r = solve_lp_raw(lp);
            if (!r.optimal()) throw NumericalError("polytope_h polar LP failed");
            return n * r.value / scale_;
        }
        case GaugeKind::PolytopeV: {
            double m = 0.0;
            bool first = true;
            for (const auto& v : data_) {
                const double s = dot(v, xstar);
                if (first || s > m) m = s;
                first = false;
            }
            return std::max(m, 0.0) / scale_;
        }
        case GaugeKind::Ellipsoid:
            return (dot(xstar, center_) + std::sqrt(std::max(0.0, quad(q_inv_, xstar, xstar)))) /
                   scale_;
    }
    return 0.0;
}

Gauge Gauge::reversed() const {
    Gauge g = *this;
    if (kind_ == GaugeKind::Ellipsoid) {
        g.center_ = negated(center_);
    } else {
        for (auto& row : g.data_) row = negated(row);
    }
    return g;
}

Gauge Gauge::rescaled(double kappa) const {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw ValidationError("gauge scale must be positive and finite");
    Gauge g = *this;
    g.scale_ = scale_ * kappa;
    return g;
}

Vec Gauge::support_point(const Vec& u) const {
    require_dim(u, dim_, "support direction");
    switch (kind_) {
        case GaugeKind::PolytopeH: {
            const double n = norm2(u);
            LinearProgram lp;
            lp.sense = Sense::Maximize;
            lp.objective = n > 0.0 ? scaled(u, 1.0 / n) : u;
            lp.nonneg.assign(dim_, false);
            for (const auto& a : data_) lp.add_row(a, Rel::LE, 1.0);
            LpResult r = solve_lp(lp);
            if (!r.optimal()) throw NumericalError("support point LP failed");
            return scaled(r.x, 1.0 / scale_);
        }
        case GaugeKind::PolytopeV: {
            std::size_t best = 0;
            for (std::size_t i = 1; i < data_.size(); ++i)
                if (dot(data_[i], u) > dot(data_[best], u) + 1e-12) best = i;
            return scaled(data_[best], 1.0 / scale_);
        }
        case GaugeKind::Ellipsoid: {
            const Vec w = mat_vec(q_inv_, u);
            const double r = std::sqrt(std::max(quad(q_inv_, u, u), 1e-300));
            return scaled(add(center_, scaled(w, 1.0 / r)), 1.0 / scale_);
        }
    }
    return {};
}

Gauge polar_gauge(const Gauge& g) {
    switch (g.kind()) {
        case GaugeKind::PolytopeH:
            return Gauge::polytope_v(g.normals(), 1.0 / g.scale());
        case GaugeKind::PolytopeV:
            return Gauge::polytope_h(g.vertices(), 1.0 / g.scale());
        case GaugeKind::Ellipsoid: {
            // polar of {(z-c)'Q(z-c) <= 1} is {y : y'Ry + 2c'y <= 1}, R = Q^-1 - cc',
            // an ellipsoid with center -R^-1 c and matrix R / (1 + c'R^-1 c).
            const std::size_t d = g.dim();
            const Mat& qi = g.q_inverse();
            const Vec& c = g.center();
            Mat r(d, Vec(d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) r[i][j] = qi[i][j] - c[i] * c[j];
            const Mat r_inv = mat_inverse(r);
            const Vec m = negated(mat_vec(r_inv, c));
            const double denom = 1.0 + quad(r_inv, c, c);
            Mat qt(d, Vec(d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) qt[i][j] = r[i][j] / denom;
            return Gauge::ellipsoid(std::move(qt), m, 1.0 / g.scale());
        }
    }
    throw ValidationError("polar_gauge: unknown gauge kind");
}

namespace {

void sort_ccw_2d(std::vector<Vec>& pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
    });
}

std::vector<Vec> h_polytope_vertices(const Mat& normals, std::size_t d) {
    const std::size_t m = normals.size();
    if (d > 4) throw NumericalError("vertex enumeration supported up to dimension 4");
    std::vector<Vec> verts;
    std::vector<std::size_t> idx(d);
    // all d-subsets of facets
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == d) {
            Mat a(d, Vec(d));
            Vec rhs(d, 1.0);
            for (std::size_t i = 0; i < d; ++i) a[i] = normals[idx[i]];
            Vec x;
            try {
                x = solve_dense(a, rhs);
            } catch (const NumericalError&) {
                return;
            }
            for (const auto& nrm : normals)
                if (dot(nrm, x) > 1.0 + 1e-9) return;
            for (const auto& v : verts)
                if (norm2(sub(v, x)) < 1e-8) return;
            verts.push_back(std::move(x));
            return;
        }
        for (std::size_t i = start; i + (d - k) <= m; ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return verts;
}

}  // namespace

std::vector<Vec> unit_ball_vertices(const Gauge& g) {
    if (!g.is_polytope())
        throw ValidationError("unit_ball_vertices: requires a polytope gauge");
    std::vector<Vec> verts;
    if (g.kind() == GaugeKind::PolytopeH) {
        verts = h_polytope_vertices(g.normals(), g.dim());
    } else {
        // keep the extreme points of the vertex hull
        const Mat& vs = g.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            LinearProgram lp;
            const std::size_t m = vs.size() - 1;
            lp.objective = zeros(m);
            lp.nonneg.assign(m, true);
            for (std::size_t coord = 0; coord < g.dim(); ++coord) {
                Vec row;
                for (std::size_t j = 0; j < vs.size(); ++j)
                    if (j != i) row.push_back(vs[j][coord]);
                lp.add_row(std::move(row), Rel::EQ, vs[i][coord]);
            }
            lp.add_row(Vec(m, 1.0), Rel::EQ, 1.0);
            LpResult r = solve_lp_raw(lp);
            if (r.status == LpStatus::Infeasible) verts.push_back(vs[i]);
        }
    }
    for (auto& v : verts) v = scaled(v, 1.0 / g.scale());
    if (g.dim() == 2) sort_ccw_2d(verts);
    return verts;
}

std::vector<Vec> halfspace_normals(const Gauge& g) {
    if (!g.is_polytope())
        throw ValidationError("halfspace_normals: requires a polytope gauge");
    std::vector<Vec> normals;
    if (g.kind() == GaugeKind::PolytopeH) {
        normals = g.normals();
    } else {
        normals = h_polytope_vertices(g.vertices(), g.dim());  // vertices of the polar ball
    }
    for (auto& nrm : normals) nrm = scaled(nrm, g.scale());
    return normals;
}

Gauge rotated_polar_gauge_2d(const Gauge& g) {
    if (g.dim() != 2) throw ValidationError("rotated_polar_gauge_2d: requires dimension 2");
    // z -> polar(rot_cw z); its unit ball is the counterclockwise rotation of
    // the polar ball. This is the composition under which forward tangents of
    // a counterclockwise boundary walk become Birkhoff orthogonal to the
    // boundary points.
    auto rot_ccw = [](const Vec& v) { return Vec{-v[1], v[0]}; };
    switch (g.kind()) {
        case GaugeKind::PolytopeH: {
            Mat verts;
            for (const auto& a : g.normals()) verts.push_back(rot_ccw(a));
            return Gauge::polytope_v(std::move(verts), 1.0 / g.scale());
        }
        case GaugeKind::PolytopeV: {
            Mat normals;
            for (const auto& v : g.vertices()) normals.push_back(rot_ccw(v));
            return Gauge::polytope_h(std::move(normals), 1.0 / g.scale());
        }
        case GaugeKind::Ellipsoid: {
            Gauge p = polar_gauge(g);
            // conjugate the polar ball through the clockwise rotation:
            // Q -> R'QR with R = rot_cw, c -> rot_ccw c
            const Mat& q = p.q();
            const Mat rot{{0.0, 1.0}, {-1.0, 0.0}};  // rot_cw
            Mat qt(2, Vec(2, 0.0));
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t k = 0; k < 2; ++k)
                        for (std::size_t l = 0; l < 2; ++l)
                            qt[i][j] += rot[k][i] * q[k][l] * rot[l][j];
            return Gauge::ellipsoid(std::move(qt), rot_ccw(p.center()), p.scale());
        }
    }
    throw ValidationError("rotated_polar_gauge_2d: unknown gauge kind");
}

}  // namespace minkspace
