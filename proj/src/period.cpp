#include "tpms/period.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "tpms/curves.hpp"
#include "tpms/quadrature.hpp"

namespace tpms::period {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using quad::SingularitySpec;
using weier::circle_factor_arg;
using weier::CurveId;

SingularitySpec lower(double exponent, SingularitySpec::Subst s) {
    return {SingularitySpec::End::lower, exponent, s};
}
SingularitySpec upper(double exponent, SingularitySpec::Subst s) {
    return {SingularitySpec::End::upper, exponent, s};
}

// |dh| on the circle for the limit integrals, with 0<a<1 arbitrary.
double circle_dh(double a, double t) {
    const double s = std::sin(0.5 * t);
    return 1.0 / std::sqrt((1.0 - a) * (1.0 - a) / a + 4.0 * s * s);
}

}  // namespace

double i_gamma(const SurfaceParams& p) {
    auto f = [&p](double t) {
        return std::cos(weier::gamma_phase(p, t)) * weier::gamma_abs_dh(p, t);
    };
    return quad::integrate_smooth(f, 0.0, kPi).value;
}

double i_gamma_limit_b1(double a, double x) {
    // -int_0^pi Im{ z^{1/4} ((1-az)/(z-a))^{1/4} ((z+x)/(xz+1))^{1/2} } |dh|
    const double ka = (1.0 + a) / (1.0 - a);
    const double kx = (1.0 - x) / (1.0 + x);
    auto f = [=](double t) {
        const double phase = 0.25 * t - 0.25 * circle_factor_arg(ka, t) +
                             0.5 * circle_factor_arg(kx, t);
        return -std::sin(phase) * circle_dh(a, t);
    };
    return quad::integrate_smooth(f, 0.0, kPi).value;
}

double i_gamma_limit_ba(double a, double x) {
    // int_0^pi Re{ z^{1/4} ((z-a)/(1-az))^{1/4} ((z+x)/(xz+1))^{1/2} } |dh|
    const double ka = (1.0 + a) / (1.0 - a);
    const double kx = (1.0 - x) / (1.0 + x);
    auto f = [=](double t) {
        const double phase = 0.25 * t + 0.25 * circle_factor_arg(ka, t) +
                             0.5 * circle_factor_arg(kx, t);
        return std::cos(phase) * circle_dh(a, t);
    };
    return quad::integrate_smooth(f, 0.0, kPi).value;
}

double i_delta(const SurfaceParams& p) {
    const auto c = weier::make_curve(p, CurveId::delta);
    auto f = [&c](double t, double d_lo, double d_hi) {
        const double g = c.abs_g(t, d_lo, d_hi);
        return 0.5 * (1.0 / g - g) * c.abs_dh(t, d_lo, d_hi);
    };
    // (t-a)^{-3/4} at a (|g||dh|), (b-t)^{-1/2} at b (|g|^{-1}|dh|)
    return quad::integrate(f, p.a, p.b,
                           lower(-0.75, SingularitySpec::Subst::quartic_shift),
                           upper(-0.5, SingularitySpec::Subst::sqrt_shift))
        .value;
}

double sigma_j1(const SurfaceParams& p) {
    const auto c = weier::make_curve(p, CurveId::sigma1);
    auto f = [&c](double t, double d_lo, double d_hi) {
        const double g = c.abs_g(t, d_lo, d_hi);
        return 0.5 * (1.0 / g - g) * c.abs_dh(t, d_lo, d_hi);
    };
    // t^{-3/4} at 0, (x-t)^{-1/2} at x
    return quad::integrate(f, 0.0, p.x,
                           lower(-0.75, SingularitySpec::Subst::quartic_shift),
                           upper(-0.5, SingularitySpec::Subst::sqrt_shift))
        .value;
}

double sigma_j2(const SurfaceParams& p) {
    const auto c = weier::make_curve(p, CurveId::sigma2);
    const double half_sqrt2 = std::sqrt(2.0) / 4.0;
    auto f = [&c, half_sqrt2](double t, double d_lo, double d_hi) {
        const double g = c.abs_g(t, d_lo, d_hi);
        return half_sqrt2 * (1.0 / g + g) * c.abs_dh(t, d_lo, d_hi);
    };
    // t^{-3/4} at 0, (a-t)^{-3/4} at a
    return quad::integrate(f, 0.0, p.a,
                           lower(-0.75, SingularitySpec::Subst::quartic_shift),
                           upper(-0.75, SingularitySpec::Subst::quartic_shift))
        .value;
}

double i_sigma(const SurfaceParams& p) { return sigma_j1(p) - sigma_j2(p); }

PeriodResidual residuals(const SurfaceParams& p) {
    return {i_gamma(p), i_delta(p), i_sigma(p)};
}

double additivity_defect(const SurfaceParams& p) {
    const PeriodResidual r = residuals(p);
    return r.i_delta - r.i_gamma - r.i_sigma;
}

double eq22_integral(double x) {
    // -int_0^pi Im sqrt((z+x)/(xz+1)) dt = -int_0^pi sin(X(t)) dt
    const double kx = (1.0 - x) / (1.0 + x);
    auto f = [=](double t) { return -std::sin(0.5 * circle_factor_arg(kx, t)); };
    return quad::integrate_smooth(f, 0.0, kPi).value;
}

namespace {

// Bracketing root search (Illinois variant of regula falsi: the bracket never
// widens and the worst case degenerates to bisection).
template <class F>
double bracketed_root(F&& f, double lo, double hi, double f_lo, double f_hi,
                      double x_tol, double f_tol, int max_iter = 200) {
    double a = lo, b = hi, fa = f_lo, fb = f_hi;
    double best_x = std::abs(fa) < std::abs(fb) ? a : b;
    int side = 0;
    for (int it = 0; it < max_iter; ++it) {
        const double m = (std::abs(fb - fa) > 0.0) ? a - fa * (b - a) / (fb - fa)
                                                   : 0.5 * (a + b);
        double x = m;
        // keep strictly inside; fall back to bisection if the secant stalls
        if (!(x > a) || !(x < b)) x = 0.5 * (a + b);
        const double fx = f(x);
        if (std::abs(fx) <= f_tol) return x;
        if ((fa < 0.0) == (fx < 0.0)) {
            a = x;
            fa = fx;
            if (side == -1) fb *= 0.5;
            side = -1;
        } else {
            b = x;
            fb = fx;
            if (side == +1) fa *= 0.5;
            side = +1;
        }
        best_x = std::abs(fa) < std::abs(fb) ? a : b;
        if (b - a <= x_tol) return best_x;
    }
    return best_x;
}

}  // namespace

bool in_region(double a, double x) { return i_gamma_limit_b1(a, x) <= 0.0; }

double solve_b(double a, double x, double tol) {
    if (!(0.0 < a && a < 1.0) || !(0.0 <= x && x < 1.0))
        throw ParamDomainError("solve_b: need 0<a<1 and 0<=x<1");
    auto f = [&](double b) { return i_gamma(SurfaceParams{a, b, x}); };
    // I_gamma decreases in b: root exists iff the endpoint limits straddle 0.
    const double f_ba = i_gamma_limit_ba(a, x);   // b -> a limit (exact form)
    const double f_b1 = i_gamma_limit_b1(a, x);   // b -> 1 limit
    if (!(f_ba > 0.0) || !(f_b1 < 0.0)) {
        std::ostringstream os;
        os << "solve_b: no sign change of I_gamma on (a,1) at (a,x)=(" << a << ","
           << x << "); I_gamma(b->a)=" << f_ba << ", I_gamma(b->1)=" << f_b1
           << ((f_b1 >= 0.0) ? " -- (a,x) outside the region R" : "");
        throw NoRootError(os.str(), f_ba, f_b1);
    }
    const double eps = 1e-7;
    double lo = a + eps * (1.0 - a);
    double hi = 1.0 - eps * (1.0 - a);
    double f_lo = f(lo), f_hi = f(hi);
    // the root can hug either endpoint; squeeze the bracket toward the limit
    for (int k = 0; k < 6 && !(f_lo > 0.0); ++k) {
        lo = a + 0.01 * (lo - a);
        f_lo = f(lo);
    }
    for (int k = 0; k < 6 && !(f_hi < 0.0); ++k) {
        hi = 1.0 - 0.01 * (1.0 - hi);
        f_hi = f(hi);
    }
    if (!(f_lo > 0.0)) return lo;  // root within 1e-19 of a
    if (!(f_hi < 0.0)) return hi;  // root within 1e-19 of 1
    return bracketed_root(f, lo, hi, f_lo, f_hi, tol, kResidualTol);
}

double alpha(double tol) {
    // I_gamma|_{(b,x)=(1,0)} is negative at a=1/2 and diverges to +infinity as
    // a->1; bracket upward from 1/2.
    auto f = [](double a) { return i_gamma_limit_b1(a, 0.0); };
    double lo = 0.5, f_lo = f(lo);
    if (!(f_lo < 0.0))
        throw std::runtime_error("alpha: expected I_gamma|_{(1,0)} < 0 at a=1/2");
    double hi = 0.75, f_hi = f(hi);
    while (!(f_hi > 0.0)) {
        hi = 0.5 * (hi + 1.0);
        if (1.0 - hi < 1e-12)
            throw std::runtime_error("alpha: bracketing failure near a=1");
        f_hi = f(hi);
    }
    return bracketed_root(f, lo, hi, f_lo, f_hi, tol, kResidualTol);
}

double x_a(double a, double tol) {
    auto f = [a](double x) { return i_gamma_limit_b1(a, x); };
    const double f0 = f(0.0);
    if (!(f0 < 0.0))
        throw ParamDomainError(
            "x_a: a >= alpha, I_gamma|_{b=1} has no root in x (value at x=0 is "
            "non-negative)");
    const double f1 = f(1.0);
    if (!(f1 > 0.0))
        throw std::runtime_error("x_a: expected I_gamma|_{(1,1)} > 0");
    return bracketed_root(f, 0.0, 1.0, f0, f1, tol, kResidualTol);
}

namespace {

// Residual along graph(b): F(a,x) = i_delta(a, b(a,x), x). On graph(b) the
// gamma residual vanishes, so the curve is exactly {F = 0}.
double graph_b_delta(double a, double x, double b_tol, double* b_out = nullptr) {
    const double b = solve_b(a, x, b_tol);
    if (b_out) *b_out = b;
    return i_delta(SurfaceParams{a, b, x});
}

FamilyCurvePoint make_point(double a, double x, double b) {
    FamilyCurvePoint pt;
    pt.params = SurfaceParams{a, b, x};
    pt.residual.i_gamma = i_gamma(pt.params);
    pt.residual.i_delta = i_delta(pt.params);
    // At x=0 the two sigma stretches individually diverge; their difference is
    // still the value forced by the contour relation, which we report.
    if (x > 1e-12)
        pt.residual.i_sigma = i_sigma(pt.params);
    else
        pt.residual.i_sigma = pt.residual.i_delta - pt.residual.i_gamma;
    return pt;
}

}  // namespace

std::vector<FamilyCurvePoint> trace_family_curve(int n_points, double tol,
                                                 double a_min) {
    if (n_points < 2) throw std::invalid_argument("trace: need n_points >= 2");
    const double b_tol = 1e-11;
    std::vector<FamilyCurvePoint> pts;

    // --- first point: on the curve at a = a_min (the (0,1,1) end) ---------
    // Find x with F(a_min, x) = 0; bracket inside (0, x_a(a_min)).
    const double xa_min = x_a(a_min, 1e-10);
    {
        double x_hi = xa_min * (1.0 - 1e-4);
        double f_hi = graph_b_delta(a_min, x_hi, b_tol);
        double x_lo = 0.05, f_lo = graph_b_delta(a_min, x_lo, b_tol);
        if ((f_lo < 0.0) == (f_hi < 0.0))
            throw TraceError("trace: no sign change in x at a_min", {});
        auto fx = [&](double x) { return graph_b_delta(a_min, x, b_tol); };
        const double x0 = bracketed_root(fx, x_lo, x_hi, f_lo, f_hi, 1e-12, tol);
        pts.push_back(make_point(a_min, x0, solve_b(a_min, x0, b_tol)));
    }

    // --- march the solved x down to zero ----------------------------------
    // Schedule: n_points-1 further stations from x0 down to exactly 0.  The
    // a-root at each station is bracketed around the previous a.
    const double x0 = pts.front().params.x;
    std::vector<double> xs;
    for (int k = 1; k < n_points; ++k) {
        const double u = static_cast<double>(k) / (n_points - 1);
        xs.push_back(x0 * (1.0 - u));
    }

    double a_prev = pts.front().params.a;
    double a_step0 = 0.05;
    for (double x : xs) {
        auto fa = [&](double a) { return graph_b_delta(a, x, b_tol); };
        // expanding bracket around the previous a
        double step = a_step0;
        double lo = a_prev, hi = a_prev;
        double f_prev = fa(a_prev);
        double f_lo = f_prev, f_hi = f_prev;
        for (int tries = 0; tries < 60 && (f_lo < 0.0) == (f_hi < 0.0); ++tries) {
            if (f_prev > 0.0) {
                // positive residual: the root lies at larger a
                hi = hi + step;
                if (!in_region(hi, x)) {
                    // stay inside R: clamp toward x_a-boundary
                    double clamp_hi = hi;
                    while (!in_region(clamp_hi, x) && clamp_hi > lo)
                        clamp_hi = 0.5 * (clamp_hi + lo);
                    hi = clamp_hi;
                }
                f_hi = fa(hi);
            } else {
                lo = std::max(a_min * 0.5, lo - step);
                f_lo = fa(lo);
            }
            step *= 1.6;
        }
        if ((f_lo < 0.0) == (f_hi < 0.0))
            throw TraceError("trace: lost the sign change while marching x", pts);
        double b_here = 0.0;
        auto fa_b = [&](double a) { return graph_b_delta(a, x, b_tol, &b_here); };
        const double a_root = bracketed_root(fa_b, lo, hi, f_lo, f_hi, 1e-12, tol);
        pts.push_back(make_point(a_root, x, solve_b(a_root, x, b_tol)));
        a_step0 = std::max(2.0 * std::abs(a_root - a_prev), 0.01);
        a_prev = a_root;
    }

    // --- residual sanity and monotone s ------------------------------------
    for (auto& pt : pts) {
        if (std::abs(pt.residual.i_gamma) > tol || std::abs(pt.residual.i_delta) > tol)
            throw TraceError("trace: residual check failed on a solved point", pts);
    }
    double len = 0.0;
    std::vector<double> chord(pts.size(), 0.0);
    for (size_t i = 1; i < pts.size(); ++i) {
        const auto &q0 = pts[i - 1].params, &q1 = pts[i].params;
        len += std::sqrt((q1.a - q0.a) * (q1.a - q0.a) +
                         (q1.b - q0.b) * (q1.b - q0.b) +
                         (q1.x - q0.x) * (q1.x - q0.x));
        chord[i] = len;
    }
    for (size_t i = 0; i < pts.size(); ++i) pts[i].s = chord[i] / len;
    return pts;
}

IdentityReport lemma_identities_check(int n_samples, double tol, unsigned seed) {
    IdentityReport rep;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ua(0.05, 0.95);
    std::uniform_real_distribution<double> ut(1e-3, kPi - 1e-3);

    for (int i = 0; i < n_samples; ++i) {
        const double a = ua(rng);
        const double t = ut(rng);
        const std::complex<double> z = std::polar(1.0, t);

        // tan Arg{ z (1-az)/(z-a) } = 2 sin t (a cos t - 1) / (1/a - 2cos t + a cos 2t).
        // (The quantity equals (1-az)^2/|z-a|^2, so the identity follows from
        // the double-angle formula; the printed denominator in the source is
        // garbled and the corrected form is used here.)
        {
            const std::complex<double> w = z * (1.0 - a * z) / (z - a);
            const double lhs = std::tan(std::arg(w));
            const double den = 1.0 / a - 2.0 * std::cos(t) + a * std::cos(2.0 * t);
            const double rhs = 2.0 * std::sin(t) * (a * std::cos(t) - 1.0) / den;
            // compare on the arctangent scale to avoid tan blow-ups
            const double dev = std::abs(std::atan(lhs) - std::atan(rhs));
            rep.max_arg_identity_dev = std::max(rep.max_arg_identity_dev, dev);
        }

        // Im{ z^3 (1/a - z)/(z/a - 1) } =
        //   (sin 2t/a^2 - 2 sin 3t/a + sin 4t) / ((cos t/a - 1)^2 + sin^2 t/a^2)
        {
            const std::complex<double> w = z * z * z * (1.0 / a - z) / (z / a - 1.0);
            const double lhs = w.imag();
            const double num = std::sin(2 * t) / (a * a) - 2.0 * std::sin(3 * t) / a +
                               std::sin(4 * t);
            const double c = std::cos(t) / a - 1.0;
            const double den = c * c + std::sin(t) * std::sin(t) / (a * a);
            const double rhs = num / den;
            rep.max_im_identity_dev =
                std::max(rep.max_im_identity_dev, std::abs(lhs - rhs));
        }

        // a = 1/2: numerator of the previous identity factors as
        //   4 sin t (1 - cos t)(2 cos t - cos 2t)
        {
            const double num_half =
                4.0 * std::sin(2 * t) - 4.0 * std::sin(3 * t) + std::sin(4 * t);
            const double fact = 4.0 * std::sin(t) * (1.0 - std::cos(t)) *
                                (2.0 * std::cos(t) - std::cos(2.0 * t));
            rep.max_num_factor_dev =
                std::max(rep.max_num_factor_dev, std::abs(num_half - fact));
        }
    }

    // t0 = arccos((1 - sqrt 3)/2) zeroes 2cos t - cos 2t exactly.
    const double c0 = 0.5 * (1.0 - std::sqrt(3.0));
    const double t0 = std::acos(c0);
    rep.t0_zero_residual = std::abs(2.0 * c0 - (2.0 * c0 * c0 - 1.0));

    // and it is the single zero of the factor in (0,pi): locate it by scan.
    auto h = [](double t) { return 2.0 * std::cos(t) - std::cos(2.0 * t); };
    double scan_root = 0.0;
    const int n_scan = 20000;
    for (int i = 0; i < n_scan; ++i) {
        const double t1 = kPi * i / n_scan, t2 = kPi * (i + 1) / n_scan;
        if (t1 > 0.0 && (h(t1) < 0.0) != (h(t2) < 0.0)) {
            scan_root = bracketed_root(h, t1, t2, h(t1), h(t2), 1e-14, 1e-14);
            break;
        }
    }
    rep.t0_from_scan_dev = std::abs(scan_root - t0);

    rep.pass = rep.max_arg_identity_dev <= tol && rep.max_im_identity_dev <= tol &&
               rep.max_num_factor_dev <= 1e-9 && rep.t0_zero_residual <= 1e-15 &&
               rep.t0_from_scan_dev <= 1e-10;
    return rep;
}

}  // namespace tpms::period
