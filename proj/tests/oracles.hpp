// oracles.hpp -- independent brute-force references used by the tests.
//
// Everything here is deliberately primitive (midpoint Riemann sums, dense
// scans + bisection) and shares no code with the quadrature or root-finding
// paths it checks.
#pragma once

#include <cmath>
#include <functional>

namespace oracle {

// Midpoint Riemann sum with n uniform cells.
inline double riemann_midpoint(const std::function<double(double)>& f, double lo,
                               double hi, long n) {
    const double h = (hi - lo) / n;
    double acc = 0.0;
    for (long i = 0; i < n; ++i) acc += f(lo + (i + 0.5) * h);
    return acc * h;
}

// Graded midpoint sum for integrands with endpoint singularities. Cell
// boundaries are packed toward both endpoints by the power map d = L*u^q.
// The integrand receives (t, d_lo, d_hi) with the distances to the interval
// endpoints computed from the grading formula directly, so integrable
// endpoint blowups like (t-lo)^{-3/4} are evaluated without cancellation.
// The sub-eps tail that is skipped contributes O((machine eps)^{1/4}) of the
// grading cell, i.e. ~1e-14 for q=8.
inline double riemann_graded(
    const std::function<double(double t, double d_lo, double d_hi)>& f, double lo,
    double hi, long n, double q) {
    const double len = hi - lo;
    const double half_len = 0.5 * len;
    double acc = 0.0;
    const long half = n / 2;
    // left half: d_lo = half_len * u^q, u in (0,1]
    for (long i = 0; i < half; ++i) {
        const double u0 = static_cast<double>(i) / half;
        const double u1 = static_cast<double>(i + 1) / half;
        const double d0 = half_len * std::pow(u0, q);
        const double d1 = half_len * std::pow(u1, q);
        if (!(d1 > d0)) continue;
        const double dm = 0.5 * (d0 + d1);
        acc += f(lo + dm, dm, len - dm) * (d1 - d0);
    }
    // right half: d_hi = half_len * u^q
    for (long i = 0; i < half; ++i) {
        const double u0 = static_cast<double>(i) / half;
        const double u1 = static_cast<double>(i + 1) / half;
        const double d0 = half_len * std::pow(u0, q);
        const double d1 = half_len * std::pow(u1, q);
        if (!(d1 > d0)) continue;
        const double dm = 0.5 * (d0 + d1);
        acc += f(hi - dm, len - dm, dm) * (d1 - d0);
    }
    return acc;
}

// Dense scan for a sign change of f on [lo,hi] at resolution `step`, refined
// by plain bisection to `tol`. Returns NaN when no sign change is found.
inline double scan_root(const std::function<double(double)>& f, double lo,
                        double hi, double step, double tol) {
    double t0 = lo, f0 = f(t0);
    for (double t1 = lo + step; t1 <= hi + 0.5 * step; t1 += step) {
        const double f1 = f(t1);
        if ((f0 < 0.0) != (f1 < 0.0)) {
            double a = t0, b = t1, fa = f0;
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        }
        t0 = t1;
        f0 = f1;
    }
    return std::nan("");
}

}  // namespace oracle
