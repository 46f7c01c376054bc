#include "minkspace/vec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace minkspace {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(const Vec& a, double t) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

Vec axpy(double t, const Vec& x, const Vec& y) {
    Vec r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = t * x[i] + y[i];
    return r;
}

Vec negated(const Vec& a) { return scaled(a, -1.0); }

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec zeros(std::size_t d) { return Vec(d, 0.0); }

Vec unit(std::size_t d, std::size_t k) {
    Vec r(d, 0.0);
    r[k] = 1.0;
    return r;
}

bool all_finite(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); });
}

bool all_finite(const Mat& a) {
    return std::all_of(a.begin(), a.end(), [](const Vec& r) { return all_finite(r); });
}

void require_dim(const Vec& v, std::size_t d, const char* label) {
    if (v.size() != d)
        throw ValidationError(std::string(label) + ": dimension mismatch (expected " +
                              std::to_string(d) + ", got " + std::to_string(v.size()) + ")");
    if (!all_finite(v)) throw ValidationError(std::string(label) + ": entries must be finite");
}

Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

double quad(const Mat& a, const Vec& x, const Vec& y) { return dot(x, mat_vec(a, y)); }

Vec solve_dense(Mat a, Vec rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        if (std::abs(a[piv][col]) < 1e-13)
            throw NumericalError("solve_dense: matrix is singular to working precision");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = a[i][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    Vec x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

Mat mat_inverse(const Mat& a) {
    const std::size_t n = a.size();
    Mat inv(n, Vec(n));
    for (std::size_t k = 0; k < n; ++k) {
        Vec col = solve_dense(a, unit(n, k));
        for (std::size_t i = 0; i < n; ++i) inv[i][k] = col[i];
    }
    return inv;
}

Mat cholesky(const Mat& a) {
    const std::size_t n = a.size();
    Mat l(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) {
                if (s <= 1e-14) throw NumericalError("cholesky: matrix is not positive definite");
                l[i][i] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    return l;
}

Vec forward_subst(const Mat& l, const Vec& b) {
    const std::size_t n = l.size();
    Vec z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= l[i][j] * z[j];
        z[i] = s / l[i][i];
    }
    return z;
}

Vec back_subst_t(const Mat& l, const Vec& b) {
    const std::size_t n = l.size();
    Vec z(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= l[j][i] * z[j];
        z[i] = s / l[i][i];
    }
    return z;
}

Min1D golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol,
                 int max_iter) {
    static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    Min1D best{c, fc};
    if (fd < best.value) best = {d, fd};
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else if (fd < fc) {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        } else {
            // tie: the minimum lies in [c, d] for our objective classes
            a = c;
            b = d;
            c = b - kInvPhi * (b - a);
            d = a + kInvPhi * (b - a);
            fc = f(c);
            fd = f(d);
        }
        if (fc < best.value) best = {c, fc};
        if (fd < best.value) best = {d, fd};
    }
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm < best.value) best = {mid, fm};
    return best;
}

double bisect_transition(const std::function<bool(double)>& pred, double at_false, double at_true,
                         double xtol, int max_iter) {
    double f = at_false, t = at_true;
    for (int it = 0; it < max_iter && std::abs(t - f) > xtol; ++it) {
        const double mid = 0.5 * (f + t);
        if (pred(mid))
            t = mid;
        else
            f = mid;
    }
    return t;
}

}  // namespace minkspace
