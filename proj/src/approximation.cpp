#include "minkspace/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace minkspace {

Subspace::Subspace(Mat basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw ValidationError("subspace: basis must be non-empty");
    const std::size_t d = basis_[0].size();
    for (const auto& b : basis_) {
        if (b.size() != d) throw ValidationError("subspace: basis rows must have equal length");
        if (!all_finite(b)) throw ValidationError("subspace: basis entries must be finite");
    }
    if (basis_.size() > d)
        throw ValidationError("subspace: more basis vectors than ambient dimensions");
    for (const auto& b : basis_) {
        Vec r = b;
        for (const auto& o : ortho_) r = sub(r, scaled(o, dot(r, o)));
        const double n = norm2(r);
        if (n < 1e-10 * (1.0 + norm2(b)))
            throw ValidationError("subspace: basis vectors must be linearly independent");
        ortho_.push_back(scaled(r, 1.0 / n));
    }
}

Vec Subspace::from_coords(const Vec& c) const {
    if (c.size() != basis_.size())
        throw ValidationError("subspace coordinates: width mismatch");
    Vec x = zeros(ambient_dim());
    for (std::size_t j = 0; j < basis_.size(); ++j) x = axpy(c[j], basis_[j], x);
    return x;
}

Vec Subspace::project(const Vec& x) const {
    Vec p = zeros(ambient_dim());
    for (const auto& o : ortho_) p = axpy(dot(x, o), o, p);
    return p;
}

bool Subspace::contains(const Vec& x, double tol) const {
    return norm2(sub(x, project(x))) <= tol * (1.0 + norm2(x));
}

namespace {

struct MinimizerResult {
    Vec point;
    double value;
};

MinimizerResult minimize_polytope(const Gauge& g, const Subspace& u, const Vec& y) {
    const std::size_t k = u.dim();
    const std::size_t d = g.dim();
    const Mat& basis = u.basis();

    LinearProgram lp;
    if (g.kind() == GaugeKind::PolytopeH) {
        // vars: coords c (free), epigraph t (nonneg); gamma_base(u - y) <= t
        lp.objective = zeros(k + 1);
        lp.objective[k] = 1.0;
        lp.nonneg.assign(k + 1, false);
        lp.nonneg[k] = true;
        for (const auto& a : g.normals()) {
            Vec row(k + 1, 0.0);
            for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, basis[j]);
            row[k] = -1.0;
            lp.add_row(std::move(row), Rel::LE, dot(a, y));
        }
        LpResult r = solve_lp(lp);
        if (!r.optimal()) throw NumericalError("best approximation LP failed");
        Vec c(r.x.begin(), r.x.begin() + k);
        Vec point = u.from_coords(c);
        return {point, g.scale() * r.x[k]};
    }
    // V-polytope: u - y = sum mu_m v_m with mu >= 0, value = kappa * sum mu
    const Mat& verts = g.vertices();
    const std::size_t m = verts.size();
    lp.objective = zeros(k + m);
    for (std::size_t i = 0; i < m; ++i) lp.objective[k + i] = 1.0;
    lp.nonneg.assign(k + m, true);
    for (std::size_t j = 0; j < k; ++j) lp.nonneg[j] = false;
    for (std::size_t coord = 0; coord < d; ++coord) {
        Vec row(k + m, 0.0);
        for (std::size_t j = 0; j < k; ++j) row[j] = basis[j][coord];
        for (std::size_t i = 0; i < m; ++i) row[k + i] = -verts[i][coord];
        lp.add_row(std::move(row), Rel::EQ, y[coord]);
    }
    LpResult r = solve_lp(lp);
    if (!r.optimal()) throw NumericalError("best approximation LP failed");
    Vec c(r.x.begin(), r.x.begin() + k);
    Vec point = u.from_coords(c);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) total += r.x[k + i];
    return {point, g.scale() * total};
}

MinimizerResult minimize_smooth(const Gauge& g, const Subspace& u, const Vec& y) {
    const std::size_t k = u.dim();
    const Mat& basis = u.basis();
    auto value = [&](const Vec& c) { return g.eval(sub(u.from_coords(c), y)); };
    auto grad = [&](const Vec& c) {
        const Vec gg = *gateaux_gradient(g, sub(u.from_coords(c), y));
        Vec out(k);
        for (std::size_t j = 0; j < k; ++j) out[j] = dot(gg, basis[j]);
        return out;
    };

    Vec c = zeros(k);
    double fc = value(c);
    double step = 1.0;
    bool converged = false;
    for (int it = 0; it < 10000; ++it) {
        const Vec gv = grad(c);
        const double gn = norm2(gv);
        if (gn < 1e-12) {
            converged = true;
            break;
        }
        step = std::min(step * 2.0, 1e3);
        Vec cn;
        double fn = 0.0;
        while (true) {
            cn = sub(c, scaled(gv, step));
            fn = value(cn);
            if (fn <= fc - 1e-4 * step * gn * gn || step < 1e-14) break;
            step *= 0.5;
        }
        if (step < 1e-14) {
            converged = true;  // no descent possible at working precision
            break;
        }
        const double move = step * gn;
        c = cn;
        fc = fn;
        if (move < 1e-11 * (1.0 + norm2(c))) {
            converged = true;
            break;
        }
    }
    if (!converged) throw NumericalError("best approximation descent did not converge");

    // Newton polish on the stationarity system grad(c) = 0
    for (int it = 0; it < 8; ++it) {
        const Vec s = grad(c);
        if (norm2(s) < 1e-13) break;
        Mat jac(k, Vec(k));
        for (std::size_t j = 0; j < k; ++j) {
            const double h = 1e-7 * (1.0 + std::abs(c[j]));
            Vec cj = c;
            cj[j] += h;
            const Vec sj = grad(cj);
            for (std::size_t i = 0; i < k; ++i) jac[i][j] = (sj[i] - s[i]) / h;
        }
        Vec delta;
        try {
            delta = solve_dense(jac, s);
        } catch (const NumericalError&) {
            break;
        }
        const Vec cn = sub(c, delta);
        if (norm2(grad(cn)) < norm2(s))
            c = cn;
        else
            break;
    }
    return {u.from_coords(c), value(c)};
}

Vec certificate_from_point(const Gauge& g, const Subspace& u, const Vec& y, const Vec& point) {
    const Vec diff = sub(point, y);
    if (g.kind() == GaugeKind::Ellipsoid) return *gateaux_gradient(g, diff);

    // maximize <x*, point - y> over the slightly relaxed subdifferential region
    // intersected with the annihilator of U; the optimum reaches gamma(point-y),
    // which forces gamma_polar(x*) = 1
    LinearProgram lp = subdifferential_region(g, diff, 1e-9 * g.scale());
    lp.sense = Sense::Maximize;
    const std::size_t n = lp.num_vars();
    if (g.kind() == GaugeKind::PolytopeH) {
        const Mat& a = g.normals();
        for (std::size_t i = 0; i < n; ++i) lp.objective[i] = dot(a[i], diff);
        for (const auto& b : u.basis()) {
            Vec row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = dot(a[i], b);
            lp.add_row(std::move(row), Rel::EQ, 0.0);
        }
    } else {
        lp.objective = diff;
        for (const auto& b : u.basis()) lp.add_row(b, Rel::EQ, 0.0);
    }
    LpResult r = solve_lp(lp);
    if (r.status == LpStatus::Infeasible)
        throw NumericalError("best approximation certificate LP is infeasible");
    if (!r.optimal()) throw NumericalError("best approximation certificate LP failed");
    return subdifferential_point_from_region(g, r.x);
}

}  // namespace

BestApproxResult best_approximation(const Gauge& g, const Subspace& u, const Vec& y, double eps) {
    require_dim(y, g.dim(), "best approximation target");
    if (u.ambient_dim() != g.dim())
        throw ValidationError("best approximation: subspace dimension mismatch");
    if (u.dim() >= g.dim())
        throw ValidationError("best approximation: subspace must be proper (dim U < d)");
    if (eps < 0.0) throw ValidationError("relaxation eps must be non-negative");
    if (u.contains(y))
        throw ValidationError("best approximation: y must lie outside the subspace");

    MinimizerResult m = g.is_polytope() ? minimize_polytope(g, u, y) : minimize_smooth(g, u, y);
    if (m.value <= 1e-9)
        throw ValidationError("best approximation: y must lie outside the subspace");
    Vec cert = certificate_from_point(g, u, y, m.point);
    return {m.point, m.value, std::move(cert)};
}

bool best_approx_membership(const Gauge& g, const Subspace& u, const Vec& y, double eps,
                            const Vec& x, double tol) {
    require_dim(x, g.dim(), "membership candidate");
    if (!u.contains(x))
        throw ValidationError("best approximation membership: x must lie in the subspace");
    const double rho = best_approximation(g, u, y, 0.0).value;
    return g.eval(sub(x, y)) <= rho + eps + tol;
}

bool coapprox_membership_sampled(const Gauge& g, const Subspace& u, const Vec& y, double eps,
                                 const Vec& x, int samples, double tol) {
    require_dim(x, g.dim(), "membership candidate");
    if (!u.contains(x))
        throw ValidationError("co-approximation membership: x must lie in the subspace");
    if (samples < 2) throw ValidationError("co-approximation membership: needs samples >= 2");
    const std::size_t k = u.dim();
    if (std::pow(static_cast<double>(samples), static_cast<double>(k)) > 2e6)
        throw ValidationError("co-approximation membership: sample budget too large");

    const double radius = 8.0 * std::max(g.eval(y), g.eval(negated(y)));
    const Mat& ortho = u.orthonormal_basis();
    std::vector<int> idx(k, 0);
    while (true) {
        Vec z = zeros(g.dim());
        for (std::size_t j = 0; j < k; ++j) {
            const double cj = -radius + 2.0 * radius * idx[j] / (samples - 1);
            z = axpy(cj, ortho[j], z);
        }
        if (g.eval(sub(x, z)) > g.eval(sub(y, z)) + eps + tol) return false;
        std::size_t j = 0;
        for (; j < k; ++j) {
            if (++idx[j] < samples) break;
            idx[j] = 0;
        }
        if (j == k) break;
    }
    return true;
}

namespace {

// deterministic unit directions in the coordinate space of U
std::vector<Vec> sphere_directions(std::size_t k, int samples) {
    std::vector<Vec> dirs;
    if (k == 1) {
        dirs.push_back({1.0});
        dirs.push_back({-1.0});
        return dirs;
    }
    if (k == 2) {
        for (int i = 0; i < samples; ++i) {
            const double th = 2.0 * std::numbers::pi * i / samples;
            dirs.push_back({std::cos(th), std::sin(th)});
        }
        return dirs;
    }
    if (k == 3) {
        const int n1 = std::max(4, static_cast<int>(std::sqrt(samples)));
        for (int i = 0; i <= n1; ++i) {
            const double ph = std::numbers::pi * i / n1;
            for (int j = 0; j < n1; ++j) {
                const double th = 2.0 * std::numbers::pi * j / n1;
                dirs.push_back({std::sin(ph) * std::cos(th), std::sin(ph) * std::sin(th),
                                std::cos(ph)});
                if (i == 0 || i == n1) break;  // poles once
            }
        }
        return dirs;
    }
    throw ValidationError("direction grids support subspaces up to dimension 3");
}

}  // namespace

bool coapprox_sufficient_test(const Gauge& g, const Subspace& u, const Vec& y, const Vec& x,
                              double eps, int samples, double tol) {
    require_dim(x, g.dim(), "co-approximation candidate");
    if (!u.contains(x))
        throw ValidationError("co-approximation test: x must lie in the subspace");
    if (eps < 0.0) throw ValidationError("relaxation eps must be non-negative");
    const Vec w = sub(y, x);
    const Mat& ortho = u.orthonormal_basis();
    const std::size_t k = u.dim();

    std::vector<Vec> dirs;
    for (const auto& b : u.basis()) {
        dirs.push_back(scaled(b, 1.0 / norm2(b)));
        dirs.push_back(scaled(b, -1.0 / norm2(b)));
    }
    for (const auto& c : sphere_directions(k, samples)) {
        Vec z = zeros(g.dim());
        for (std::size_t j = 0; j < k; ++j) z = axpy(c[j], ortho[j], z);
        dirs.push_back(std::move(z));
    }

    if (eps == 0.0) {
        for (const auto& z : dirs)
            if (!birkhoff_test(g, z, w, 0.0, tol)) return false;
        return true;
    }
    const double radius = 8.0 * std::max(g.eval(y), g.eval(negated(y)));
    for (const double r : {radius / 8.0, radius / 4.0, radius / 2.0, radius}) {
        for (const auto& z : dirs)
            if (!birkhoff_test(g, scaled(z, r), w, eps, tol)) return false;
    }
    return true;
}

double polar_section_support(const Gauge& g, const Subspace& u, const Vec& w) {
    require_dim(w, g.dim(), "support direction");
    if (!g.is_polytope())
        throw ValidationError("polar_section_support: requires a polytope gauge");
    LinearProgram lp;
    lp.sense = Sense::Maximize;
    if (g.kind() == GaugeKind::PolytopeH) {
        const Mat& a = g.normals();
        const std::size_t m = a.size();
        lp.objective.resize(m);
        for (std::size_t i = 0; i < m; ++i) lp.objective[i] = dot(a[i], w);
        lp.nonneg.assign(m, true);
        lp.add_row(Vec(m, 1.0), Rel::EQ, 1.0);
        for (const auto& b : u.basis()) {
            Vec row(m);
            for (std::size_t i = 0; i < m; ++i) row[i] = dot(a[i], b);
            lp.add_row(std::move(row), Rel::EQ, 0.0);
        }
    } else {
        lp.objective = w;
        lp.nonneg.assign(g.dim(), false);
        for (const auto& v : g.vertices()) lp.add_row(v, Rel::LE, 1.0);
        for (const auto& b : u.basis()) lp.add_row(b, Rel::EQ, 0.0);
    }
    LpResult r = solve_lp_raw(lp);
    if (r.status == LpStatus::Infeasible)
        throw NumericalError("polar section is empty");
    if (!r.optimal()) throw NumericalError("polar section support LP failed");
    return g.scale() * r.value;
}

}  // namespace minkspace
