#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "minkspace/errors.hpp"

namespace minkspace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // dense, row major

double dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double t);
Vec axpy(double t, const Vec& x, const Vec& y);  // t*x + y
Vec negated(const Vec& a);
double norm2(const Vec& a);
Vec zeros(std::size_t d);
Vec unit(std::size_t d, std::size_t k);
bool all_finite(const Vec& a);
bool all_finite(const Mat& a);
void require_dim(const Vec& v, std::size_t d, const char* label);

Vec mat_vec(const Mat& a, const Vec& x);
Mat transpose(const Mat& a);
double quad(const Mat& a, const Vec& x, const Vec& y);  // x' A y

// Gaussian elimination with partial pivoting; NumericalError on singular input.
Vec solve_dense(Mat a, Vec rhs);
Mat mat_inverse(const Mat& a);

// Lower Cholesky factor of a symmetric positive definite matrix;
// NumericalError when a pivot is not strictly positive.
Mat cholesky(const Mat& a);
Vec forward_subst(const Mat& l, const Vec& b);  // L z = b
Vec back_subst_t(const Mat& l, const Vec& b);   // L' z = b

struct Min1D {
    double arg = 0.0;
    double value = 0.0;
};

// Golden-section minimization on [lo, hi]. Safe for convex objectives and for
// slope functions of convex objectives: in both cases f(c) == f(d) implies the
// minimum lies in [c, d], so ties shrink the bracket from both ends.
Min1D golden_min(const std::function<double(double)>& f, double lo, double hi,
                 double xtol, int max_iter = 240);

// Locates the transition point of a monotone boolean predicate by bisection.
// pred(at_false) must be false and pred(at_true) true; the two may be given in
// either order. Returns a point within xtol of the boundary, on the true side.
double bisect_transition(const std::function<bool(double)>& pred, double at_false,
                         double at_true, double xtol, int max_iter = 200);

}  // namespace minkspace
