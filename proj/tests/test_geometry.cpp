#include <doctest.h>

#include <numbers>

#include "minkspace/geometry.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace minkspace;
using testutil::Rng;

TEST_SUITE("geometry") {

TEST_CASE("smoothness: triangle fails with a vertex witness") {
    const Gauge g = testutil::triangle_gauge();
    const SmoothnessReport rep = smoothness_check(g);
    REQUIRE_FALSE(rep.smooth);
    REQUIRE(rep.witness.has_value());
    const auto& w = *rep.witness;
    CHECK(g.eval(w.direction) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(norm2(sub(w.subgradient_a, w.subgradient_b)) > 1e-6);
    // both witnesses are genuine subgradients
    auto fn = [&](const Vec& v) { return g.eval(v); };
    CHECK(oracle::brute_subgradient_check(fn, w.direction, 0.0, w.subgradient_a,
                                          oracle::default_grid(w.direction), 1e-7));
    CHECK(oracle::brute_subgradient_check(fn, w.direction, 0.0, w.subgradient_b,
                                          oracle::default_grid(w.direction), 1e-7));
    // right uniqueness fails at the witness: some direction has a wide interval
    double best_width = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double ph = 2.0 * std::numbers::pi * j / 8;
        const AlphaInterval iv =
            right_alpha_interval(g, w.direction, {std::cos(ph), std::sin(ph)}, 0.0);
        best_width = std::max(best_width, iv.width());
    }
    CHECK(best_width >= 1e-6);
}

TEST_CASE("rotundity: triangle fails with a facet witness") {
    const Gauge g = testutil::triangle_gauge();
    const RotundityReport rep = rotundity_check(g);
    REQUIRE_FALSE(rep.rotund);
    REQUIRE(rep.witness.has_value());
    const auto& w = *rep.witness;
    CHECK(g.eval(w.p) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.eval(w.q) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.eval(scaled(add(w.p, w.q), 0.5)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(norm2(sub(w.p, w.q)) > 1e-6);
    // left uniqueness fails along the witness segment
    const AlphaInterval iv = left_alpha_interval(g, sub(w.q, w.p), w.p, 0.0);
    CHECK(iv.width() >= 1e-6);
}

TEST_CASE("ellipsoids are smooth and rotund with degenerate intervals") {
    Rng rng(301);
    for (int inst = 0; inst < 4; ++inst) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform_int(2, 3));
        const Gauge g = testutil::random_ellipsoid(rng, d);
        CHECK(smoothness_check(g).smooth);
        CHECK(rotundity_check(g).rotund);
        for (int t = 0; t < 12; ++t) {
            const Vec x = testutil::random_nonzero_vec(rng, d);
            const Vec y = testutil::random_nonzero_vec(rng, d);
            CHECK(right_alpha_interval(g, x, y, 0.0).width() <= 1e-8);
            CHECK(left_alpha_interval(g, x, y, 0.0).width() <= 1e-8);
        }
    }
}

TEST_CASE("smooth iff right-additive on sampled triples") {
    Rng rng(307);
    const Gauge tri = testutil::triangle_gauge();
    // non-smooth: right additivity must fail somewhere (witnessed via the
    // wide right interval at a vertex: two distinct alphas orthogonal)
    const SmoothnessReport rep = smoothness_check(tri);
    const Vec& v = rep.witness->direction;
    AlphaInterval ivw;
    Vec ywit;
    for (int j = 0; j < 16; ++j) {
        const double ph = 2.0 * std::numbers::pi * j / 16;
        ywit = {std::cos(ph), std::sin(ph)};
        ivw = right_alpha_interval(tri, v, ywit, 0.0);
        if (ivw.width() > 1e-6) break;
    }
    REQUIRE(ivw.width() > 1e-6);
    // y1 + y2 is a nonzero multiple of v, which can never be orthogonal to v
    const Vec y1 = axpy(ivw.lo, v, ywit);
    const Vec y2 = negated(axpy(ivw.hi, v, ywit));
    CHECK(birkhoff_test(tri, v, y1, 0.0));
    CHECK(birkhoff_test(tri, v, y2, 0.0));
    CHECK_FALSE(birkhoff_test(tri, v, add(y1, y2), 0.0, 1e-7));

    // smooth: right additivity holds on sampled triples
    const Gauge disk = testutil::shifted_disk_gauge();
    for (int t = 0; t < 16; ++t) {
        const Vec x = testutil::random_nonzero_vec(rng, 2);
        const Vec u = testutil::random_nonzero_vec(rng, 2);
        const Vec w = testutil::random_nonzero_vec(rng, 2);
        const double a1 = right_alpha_interval(disk, x, u, 0.0).lo;
        const double a2 = right_alpha_interval(disk, x, w, 0.0).lo;
        const Vec z1 = axpy(a1, x, u);
        const Vec z2 = axpy(a2, x, w);
        CHECK(birkhoff_test(disk, x, add(z1, z2), 0.0, 1e-6));
    }
}

TEST_CASE("left additivity fails for the non-norm triangle gauge") {
    const Gauge g = testutil::triangle_gauge();
    bool found = false;
    for (int i = 0; i < 48 && !found; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 48;
        const Vec z{std::cos(th), std::sin(th)};
        // collect two left-orthogonal mates of z and test their sum
        std::vector<Vec> mates;
        for (int j = 0; j < 48; ++j) {
            const double ph = 2.0 * std::numbers::pi * j / 48;
            const Vec c{std::cos(ph), std::sin(ph)};
            if (birkhoff_test(g, c, z, 0.0, 1e-9)) mates.push_back(c);
        }
        for (std::size_t a = 0; a < mates.size() && !found; ++a)
            for (std::size_t b = a + 1; b < mates.size() && !found; ++b) {
                const Vec s = add(mates[a], mates[b]);
                if (norm2(s) > 1e-6 && birkhoff_margin(g, s, z, 0.0) < -1e-4) found = true;
            }
    }
    CHECK(found);
}

TEST_CASE("triangle section in its own plane") {
    const Gauge g = testutil::triangle_gauge();
    const Section2D sec = section2d(g, {1.0, 0.0}, {0.0, 1.0}, true);
    REQUIRE(sec.polygonal);
    // upper half of the triangle: (1,0), (0,1), (-1,0)
    REQUIRE(sec.boundary.size() == 3);
    for (const auto& p : sec.boundary) {
        const Vec v = add(scaled(sec.axis_s, p[0]), scaled(sec.axis_t, p[1]));
        CHECK(g.eval(v) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(p[1] >= -1e-12);
    }
}

TEST_CASE("euclidean 3d section is the unit semicircle") {
    const Gauge g = testutil::euclidean_gauge(3);
    const Section2D sec =
        section2d(g, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, true, 181);
    CHECK_FALSE(sec.polygonal);
    for (const auto& p : sec.boundary) {
        CHECK(std::hypot(p[0], p[1]) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(p[1] >= -1e-12);
    }
}

TEST_CASE("section points satisfy the boundary invariant on random gauges") {
    Rng rng(311);
    for (int inst = 0; inst < 6; ++inst) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform_int(2, 3));
        const Gauge g = (inst % 2 == 0) ? testutil::random_polytope_h(rng, d, 8)
                                        : testutil::random_ellipsoid(rng, d);
        const Vec x = testutil::random_nonzero_vec(rng, d);
        Vec y = testutil::random_nonzero_vec(rng, d);
        if (std::abs(dot(x, y)) > 0.95 * norm2(x) * norm2(y)) continue;
        const Section2D sec = section2d(g, x, y, true, 128);
        REQUIRE(sec.boundary.size() >= 2);
        for (const auto& p : sec.boundary) {
            const Vec v = add(scaled(x, p[0]), scaled(y, p[1]));
            CHECK(g.eval(v) == doctest::Approx(1.0).epsilon(1e-7));
        }
    }
}

TEST_CASE("maximal parallel boundary segments of the triangle") {
    const Gauge g = testutil::triangle_gauge();
    // looking down: the bottom facet runs from (-2,-1) to (2,-1)
    const Section2D below = section2d(g, {1.0, 0.0}, {0.0, -1.0}, true);
    CHECK(max_parallel_segment(below, g, {1.0, 0.0}) == doctest::Approx(4.0).epsilon(1e-9));
    // looking up: only the two slanted edges remain
    const Section2D above = section2d(g, {1.0, 0.0}, {0.0, 1.0}, true);
    CHECK(max_parallel_segment(above, g, {1.0, 0.0}) == doctest::Approx(0.0));
    // smooth sections never contain segments
    const Section2D disk = section2d(testutil::shifted_disk_gauge(), {1.0, 0.0}, {0.0, -1.0}, true);
    CHECK(max_parallel_segment(disk, testutil::shifted_disk_gauge(), {1.0, 0.0}) == 0.0);
}

TEST_CASE("unique bisector guarantee") {
    const Gauge g = testutil::triangle_gauge();
    CHECK_FALSE(unique_bisector_guarantee(g, {1.0, 0.0}, {0.0, -1.0}));  // M = 4 > 2
    CHECK(unique_bisector_guarantee(g, {1.0, 0.0}, {0.0, 1.0}));         // M = 0
    const Gauge euc = testutil::euclidean_gauge(2);
    Rng rng(313);
    for (int i = 0; i < 8; ++i) {
        CHECK(unique_bisector_guarantee(euc, testutil::random_nonzero_vec(rng, 2),
                                        testutil::random_nonzero_vec(rng, 2)));
    }
}

TEST_CASE("guarantee implies a degenerate isosceles interval on a grid") {
    Rng rng(317);
    const Gauge gauges[] = {testutil::triangle_gauge(), testutil::shifted_disk_gauge(),
                            testutil::random_polytope_v(rng, 2, 6)};
    for (const Gauge& g : gauges) {
        for (int i = 0; i < 10; ++i) {
            const double th = 2.0 * std::numbers::pi * i / 10;
            for (int j = 0; j < 10; ++j) {
                const double ph = 2.0 * std::numbers::pi * (j + 0.5) / 10;
                const Vec x{std::cos(th), std::sin(th)};
                const Vec y{std::cos(ph), std::sin(ph)};
                if (std::abs(dot(x, y)) > 0.999) continue;
                if (unique_bisector_guarantee(g, x, y)) {
                    CHECK(isosceles_alpha_interval(g, x, y).width() <= 1e-8);
                }
            }
        }
    }
}

TEST_CASE("bisector samples") {
    const Gauge euc = testutil::euclidean_gauge(2);
    const auto rows = bisector_sample(euc, {1.0, 0.0}, {{0.0, 1.0}, {1.0, 1.0}});
    REQUIRE(rows.size() == 2);
    CHECK(norm2(sub(rows[0].point_lo, {0.0, 1.0})) <= 1e-8);
    CHECK(rows[1].interval.lo == doctest::Approx(-1.0).epsilon(1e-7));

    const Gauge tri = testutil::triangle_gauge();
    const auto trow = bisector_sample(tri, {1.0, 0.0}, {{0.0, 1.0}});
    CHECK(norm2(sub(trow[0].point_lo, {0.0, 1.0})) <= 1e-7);

    // symmetric gauges: the bisector is antisymmetric under (y, alpha) negation
    Rng rng(331);
    Mat verts;
    for (int i = 0; i < 4; ++i) {
        const Vec v = testutil::random_nonzero_vec(rng, 2, 0.8, 1.5);
        verts.push_back(v);
        verts.push_back(negated(v));
    }
    const Gauge sym = Gauge::polytope_v(std::move(verts));
    const Vec x = testutil::random_nonzero_vec(rng, 2);
    for (int i = 0; i < 8; ++i) {
        const Vec y = testutil::random_nonzero_vec(rng, 2);
        const AlphaInterval a = isosceles_alpha_interval(sym, x, y);
        const AlphaInterval b = isosceles_alpha_interval(sym, x, negated(y));
        CHECK(a.lo == doctest::Approx(-b.hi).epsilon(1e-7));
        CHECK(a.hi == doctest::Approx(-b.lo).epsilon(1e-7));
    }
}

TEST_CASE("cone membership") {
    const Gauge g = testutil::triangle_gauge();
    const Cone cone = make_cone(g, {1.0, 0.0}, {0.0, -1.0});
    CHECK(g.polar(cone.functional) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(cone_membership(g, cone, {1.0, 0.0}));   // the apex itself
    CHECK(cone_membership(g, cone, {0.0, -2.0}));  // the worked example
    CHECK_FALSE(cone_membership(g, cone, {0.0, 2.0}));
    CHECK_THROWS_AS(cone_membership(g, Cone{{0.0, 0.0}, {0.0, -2.0}}, {1.0, 1.0}),
                    ValidationError);
}

TEST_CASE("cone intersections land on the bisector") {
    const Gauge g = testutil::triangle_gauge();
    const Vec x{1.0, 0.0};
    const Cone plus = make_cone(g, x, {0.0, -1.0});
    const Cone minus = make_cone(g, negated(x), {0.0, -1.0});
    CHECK(std::abs(dot(plus.functional, x)) <= 1e-12);
    // constructive members: z = mu * m for a relative-interior facet point m
    Rng rng(337);
    for (int t = 0; t < 12; ++t) {
        const double s = rng.uniform(-1.2, 1.2);
        const double mu = rng.uniform(4.0, 12.0);
        const Vec z = scaled(Vec{s, -1.0}, mu);
        if (cone_membership(g, plus, z) && cone_membership(g, minus, z)) {
            CHECK(isosceles_test(g, z, x, 1e-7));
        }
    }
    CHECK(cone_membership(g, plus, {0.0, -2.0}));
    CHECK(cone_membership(g, minus, {0.0, -2.0}));
    CHECK(isosceles_test(g, {0.0, -2.0}, x, 1e-9));
}

TEST_CASE("unimodality along chords") {
    Rng rng(347);
    for (int inst = 0; inst < 8; ++inst) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform_int(2, 3));
        const Gauge g = (inst % 2 == 0) ? testutil::random_polytope_h(rng, d, 7)
                                        : testutil::random_ellipsoid(rng, d);
        for (int t = 0; t < 20; ++t) {
            const Vec x = testutil::random_vec(rng, d);
            const Vec y = testutil::random_vec(rng, d);
            const Vec z = testutil::random_vec(rng, d);
            const double lam = rng.uniform(0.0, 1.0);
            const Vec w = add(scaled(y, lam), scaled(z, 1.0 - lam));
            const double vw = g.eval(sub(w, x));
            const double vy = g.eval(sub(y, x));
            const double vz = g.eval(sub(z, x));
            CHECK(vw <= std::max(vy, vz) + 1e-9);
            if (std::abs(vw - std::max(vy, vz)) <= 1e-9) {
                CHECK(std::abs(vy - vz) <= 1e-7);
                CHECK(std::abs(vw - vy) <= 1e-7);
            }
        }
    }
}

TEST_CASE("boundary reversal: euclidean circle is exact") {
    const Gauge g = testutil::euclidean_gauge(2);
    const ReversalReport rep = boundary_reversal_check_2d(g, 90);
    CHECK(rep.max_slack() <= 1e-9);
}

TEST_CASE("boundary reversal: triangle and shifted disk") {
    const ReversalReport tri = boundary_reversal_check_2d(testutil::triangle_gauge(), 0);
    CHECK(tri.samples == 6);  // 3 vertices + 3 edge midpoints
    CHECK(tri.max_slack() <= 1e-7);

    const ReversalReport disk = boundary_reversal_check_2d(testutil::shifted_disk_gauge(), 180);
    CHECK(disk.max_slack() <= 1e-7);

    // scale invariance of the report
    const ReversalReport scaled_rep =
        boundary_reversal_check_2d(testutil::triangle_gauge().rescaled(2.5), 0);
    CHECK(std::abs(scaled_rep.max_slack_forward - tri.max_slack_forward) <= 1e-9);
    CHECK(std::abs(scaled_rep.max_slack_rotated - tri.max_slack_rotated) <= 1e-9);
}

TEST_CASE("reversal rejects other dimensions") {
    CHECK_THROWS_AS(boundary_reversal_check_2d(testutil::euclidean_gauge(3), 32),
                    ValidationError);
}

}  // TEST_SUITE
