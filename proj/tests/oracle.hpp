#pragma once

// Brute-force reference implementations used only by tests. They depend on
// nothing but a black-box gauge evaluator, so they stay independent of the
// LP kernel and every main-path numerical routine.

#include <cstdint>
#include <functional>

#include "minkspace/vec.hpp"

namespace minkspace::oracle {

using GaugeFn = std::function<double(const Vec&)>;

struct GridSpec {
    Vec lo, hi;          // per-axis bounds
    int resolution = 16; // per-axis lattice resolution, >= 16
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;  // for the extra random points
    int random_points = 256;

    void validate() const;
};

struct BruteMin1D {
    double arg = 0.0;
    double value = 0.0;
};

// Dense scan followed by iterated local rescans; value accurate to ~1e-8 for
// convex f on the bracket.
BruteMin1D brute_min_1d(const std::function<double(double)>& f, double lo, double hi,
                        int resolution = 64);

// Verifies <x*, y - x> <= gamma(y) - gamma(x) + eps on the grid lattice plus
// seeded random points.
bool brute_subgradient_check(const GaugeFn& gauge, const Vec& x, double eps, const Vec& xstar,
                             const GridSpec& grid, double tol = 1e-9);

// Default grid centered on the origin, wide enough to exercise x.
GridSpec default_grid(const Vec& x, double halfwidth = 4.0, int resolution = 16);

}  // namespace minkspace::oracle
