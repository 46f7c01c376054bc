#include <doctest.h>

#include "minkspace/subdifferential.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace minkspace;
using testutil::Rng;

namespace {

oracle::GaugeFn as_fn(const Gauge& g) {
    return [g](const Vec& v) { return g.eval(v); };
}

}  // namespace

TEST_SUITE("subdifferential") {

TEST_CASE("directional derivative along the point itself equals the gauge value") {
    Rng rng(11);
    const Gauge gauges[] = {testutil::triangle_gauge(), testutil::shifted_disk_gauge(),
                            testutil::random_polytope_v(rng, 2, 5)};
    for (const Gauge& g : gauges) {
        for (int i = 0; i < 12; ++i) {
            const Vec x = testutil::random_nonzero_vec(rng, 2);
            CHECK(directional_derivative(g, x, x, 0.0) ==
                  doctest::Approx(g.eval(x)).epsilon(1e-7));
        }
    }
}

TEST_CASE("triangle apex: derivative toward (1,0) is 1") {
    const Gauge g = testutil::triangle_gauge();
    CHECK(directional_derivative(g, {0.0, 1.0}, {1.0, 0.0}, 0.0) == doctest::Approx(1.0));
    // the face is conv{(-1,1),(1,1)}; toward -(1,0) the maximum is again 1
    CHECK(directional_derivative(g, {0.0, 1.0}, {-1.0, 0.0}, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("at the origin the derivative is the gauge of the direction, for every eps") {
    Rng rng(13);
    const Gauge gauges[] = {testutil::triangle_gauge(), testutil::shifted_disk_gauge(),
                            testutil::random_polytope_v(rng, 2, 6)};
    for (const Gauge& g : gauges) {
        for (double eps : {0.0, 0.3, 2.0}) {
            for (int i = 0; i < 8; ++i) {
                const Vec y = testutil::random_vec(rng, 2);
                CHECK(directional_derivative(g, zeros(2), y, eps) ==
                      doctest::Approx(g.eval(y)).epsilon(1e-7));
                const SubdifferentialOracle o = subdifferential(g, zeros(2), eps);
                CHECK(o.support(y) == doctest::Approx(g.eval(y)).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("support identity: LP and slope minimization agree on random polytopes") {
    Rng rng(17);
    for (int inst = 0; inst < 30; ++inst) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform_int(2, 4));
        const Gauge g = (inst % 2 == 0)
                            ? testutil::random_polytope_h(rng, d, rng.uniform_int((int)d + 2, 12))
                            : testutil::random_polytope_v(rng, d, rng.uniform_int((int)d + 2, 12));
        const Vec x = testutil::random_nonzero_vec(rng, d);
        const Vec y = testutil::random_nonzero_vec(rng, d);
        const double eps = rng.uniform(0.0, 0.5) * g.eval(x);
        const double lp = directional_derivative(g, x, y, eps, DdMethod::Lp);
        const double slope = directional_derivative(g, x, y, eps, DdMethod::SlopeMin);
        CHECK(lp == doctest::Approx(slope).epsilon(1e-6));
    }
}

TEST_CASE("interval identity: extreme points attain the support values") {
    Rng rng(19);
    for (int inst = 0; inst < 24; ++inst) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform_int(2, 3));
        Gauge g = [&]() {
            switch (inst % 3) {
                case 0:
                    return testutil::random_polytope_h(rng, d, rng.uniform_int((int)d + 2, 10));
                case 1:
                    return testutil::random_polytope_v(rng, d, rng.uniform_int((int)d + 2, 10));
                default:
                    return testutil::random_ellipsoid(rng, d);
            }
        }();
        const Vec x = testutil::random_nonzero_vec(rng, d);
        const double eps = rng.uniform(0.0, 0.5) * g.eval(x);
        const SubdifferentialOracle o = subdifferential(g, x, eps);
        for (int t = 0; t < 6; ++t) {
            const Vec u = testutil::random_nonzero_vec(rng, d);
            const double hi = o.support(u);
            const double lo = -o.support(negated(u));
            CHECK(lo <= hi + 1e-9);
            CHECK(dot(o.extreme_point(u), u) == doctest::Approx(hi).epsilon(1e-7));
            CHECK(dot(o.extreme_point(negated(u)), u) == doctest::Approx(lo).epsilon(1e-7));
        }
    }
}

TEST_CASE("extreme points are eps-subgradients (brute-force inequality check)") {
    Rng rng(23);
    for (int inst = 0; inst < 18; ++inst) {
        const std::size_t d = 2;
        Gauge g = [&]() {
            switch (inst % 3) {
                case 0:
                    return testutil::random_polytope_h(rng, d, rng.uniform_int(4, 9));
                case 1:
                    return testutil::random_polytope_v(rng, d, rng.uniform_int(4, 9));
                default:
                    return testutil::random_ellipsoid(rng, d);
            }
        }();
        const Vec x = testutil::random_nonzero_vec(rng, d);
        const double eps = rng.uniform(0.0, 0.6) * g.eval(x);
        const SubdifferentialOracle o = subdifferential(g, x, eps);
        const Vec u = testutil::random_nonzero_vec(rng, d);
        const Vec xs = o.extreme_point(u);
        CHECK(g.polar(xs) <= 1.0 + 1e-7);
        CHECK(dot(xs, x) >= g.eval(x) - eps - 1e-7);
        CHECK(oracle::brute_subgradient_check(as_fn(g), x, eps, xs, oracle::default_grid(x),
                                              1e-7));
    }
}

TEST_CASE("triangle edge-interior direction has the unique active functional") {
    const Gauge g = testutil::triangle_gauge();
    const SubdifferentialOracle o = subdifferential(g, {1.0, -1.0}, 0.0);
    CHECK(o.support({0.0, 1.0}) == doctest::Approx(-1.0));
    CHECK(o.support({1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-9));
    const Vec grad = *gateaux_gradient(g, {1.0, -1.0});
    CHECK(norm2(sub(grad, {0.0, -1.0})) <= 1e-8);
}

TEST_CASE("euclidean extreme point is the unit normal on the right half-plane") {
    const Gauge g = testutil::euclidean_gauge(2);
    const SubdifferentialOracle o = subdifferential(g, {1.0, 0.0}, 0.0);
    for (const Vec u : {Vec{1.0, 0.2}, Vec{0.5, -0.7}, Vec{2.0, 0.0}}) {
        CHECK(norm2(sub(o.extreme_point(u), {1.0, 0.0})) <= 1e-9);
    }
}

TEST_CASE("gateaux gradient of the shifted disk matches finite differences") {
    const Gauge g = testutil::shifted_disk_gauge();
    const Vec x{1.5, 0.0};
    const auto grad = gateaux_gradient(g, x);
    REQUIRE(grad.has_value());
    CHECK(norm2(sub(*grad, {2.0 / 3.0, 0.0})) <= 1e-9);
    for (std::size_t k = 0; k < 2; ++k) {
        Vec lo = x, hi = x;
        hi[k] += 1e-6;
        lo[k] -= 1e-6;
        const double fd = (g.eval(hi) - g.eval(lo)) / 2e-6;
        CHECK((*grad)[k] == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("gateaux gradient: apex direction is non-smooth, edge direction smooth") {
    const Gauge g = testutil::triangle_gauge();
    CHECK_FALSE(gateaux_gradient(g, {0.0, 1.0}).has_value());
    CHECK(gateaux_gradient(g, {1.0, -1.0}).has_value());
    CHECK_THROWS_AS(gateaux_gradient(g, {0.0, 0.0}), ValidationError);
}

TEST_CASE("eps-version of the stationarity rule on 1D restrictions") {
    Rng rng(29);
    for (int inst = 0; inst < 20; ++inst) {
        const std::size_t d = 2;
        const Gauge g = (inst % 2 == 0) ? testutil::random_polytope_h(rng, d, 6)
                                        : testutil::random_ellipsoid(rng, d);
        const Vec x = testutil::random_nonzero_vec(rng, d);
        const Vec y = testutil::random_nonzero_vec(rng, d);
        const double eps = rng.uniform(0.0, 0.8);
        auto h = [&](double lam) { return g.eval(axpy(lam, y, x)); };
        const double spread = g.eval(x) + g.eval(negated(x));
        const double bound = spread / std::min(g.eval(y), g.eval(negated(y))) + 1.0;
        const auto bm = oracle::brute_min_1d(h, -bound, bound, 96);
        const bool eps_minimal = h(0.0) <= bm.value + eps + 1e-9;
        const bool derivative_nonneg =
            directional_derivative(g, x, y, eps) >= -1e-9 &&
            directional_derivative(g, x, negated(y), eps) >= -1e-9;
        CHECK(eps_minimal == derivative_nonneg);
    }
}

TEST_CASE("subdifferential region parametrization matches the oracle") {
    Rng rng(37);
    for (int inst = 0; inst < 10; ++inst) {
        const std::size_t d = 2;
        const Gauge g = (inst % 2 == 0) ? testutil::random_polytope_h(rng, d, 6)
                                        : testutil::random_polytope_v(rng, d, 6);
        const Vec x = testutil::random_nonzero_vec(rng, d);
        const double eps = rng.uniform(0.0, 0.4) * g.eval(x);
        LinearProgram region = subdifferential_region(g, x, eps);
        region.sense = Sense::Maximize;
        const Vec u = testutil::random_nonzero_vec(rng, d);
        if (g.kind() == GaugeKind::PolytopeH) {
            const Mat& a = g.normals();
            for (std::size_t i = 0; i < a.size(); ++i) region.objective[i] = dot(a[i], u);
        } else {
            region.objective = u;
        }
        LpResult r = solve_lp(region);
        REQUIRE(r.optimal());
        const Vec xs = subdifferential_point_from_region(g, r.x);
        CHECK(dot(xs, u) == doctest::Approx(subdifferential(g, x, eps).support(u)).epsilon(1e-7));
    }
}

}  // TEST_SUITE
