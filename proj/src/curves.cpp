#include "tpms/curves.hpp"

#include <cmath>
#include <stdexcept>

namespace tpms::weier {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double quarter_root(double v) { return std::sqrt(std::sqrt(v)); }
}  // namespace

double circle_factor_arg(double kappa, double t) {
    return 2.0 * std::atan2(kappa * std::sin(0.5 * t), std::cos(0.5 * t));
}

double gamma_phase(const SurfaceParams& p, double t) {
    const double A = circle_factor_arg((1.0 + p.a) / (1.0 - p.a), t);
    const double B = circle_factor_arg((1.0 + p.b) / (1.0 - p.b), t);
    const double X = circle_factor_arg((1.0 - p.x) / (1.0 + p.x), t);
    // arg z /4 + arg[(1-az)/(z-a)]/4 + arg[(b-z)/(bz-1)]/2 + arg[(z+x)/(xz+1)]/2
    return 0.25 * t - 0.25 * A + 0.5 * B + 0.5 * X;
}

double gamma_abs_dh(const SurfaceParams& p, double t) {
    const double s = std::sin(0.5 * t);
    const double rad = (1.0 - p.a) * (1.0 - p.a) / p.a + 4.0 * s * s;
    return 1.0 / std::sqrt(rad);
}

std::complex<double> CurveSpec::z_of_t(double t) const {
    switch (id) {
        case CurveId::gamma: return std::polar(1.0, t);
        case CurveId::delta: return {t, 0.0};
        case CurveId::sigma1: return {-t, 0.0};
        case CurveId::sigma2: return {t, 0.0};
    }
    return {};
}

double CurveSpec::abs_g(double t, double d_lo, double d_hi) const {
    const double a = params.a, b = params.b, x = params.x;
    switch (id) {
        case CurveId::gamma:
            return 1.0;
        case CurveId::delta: {
            // |g| = t^{1/4} ((1-at)/(t-a))^{1/4} ((b-t)/(1-bt))^{1/2} ((t+x)/(xt+1))^{1/2}
            const double tma = d_lo >= 0.0 ? d_lo : t - a;   // t - a
            const double bmt = d_hi >= 0.0 ? d_hi : b - t;   // b - t
            return quarter_root(t * (1.0 - a * t) / tma) *
                   std::sqrt(bmt / (1.0 - b * t) * (t + x) / (x * t + 1.0));
        }
        case CurveId::sigma1: {
            // z = -t: |g| = t^{1/4} ((1+at)/(a+t))^{1/4} ((b+t)/(1+bt))^{1/2} ((x-t)/(1-xt))^{1/2}
            const double tt = d_lo >= 0.0 ? d_lo : t;        // t - 0
            const double xmt = d_hi >= 0.0 ? d_hi : x - t;   // x - t
            return quarter_root(tt * (1.0 + a * t) / (a + t)) *
                   std::sqrt((b + t) / (1.0 + b * t) * xmt / (1.0 - x * t));
        }
        case CurveId::sigma2: {
            // |g| = t^{1/4} ((1-at)/(a-t))^{1/4} ((b-t)/(1-bt))^{1/2} ((x+t)/(1+xt))^{1/2}
            const double tt = d_lo >= 0.0 ? d_lo : t;        // t - 0
            const double amt = d_hi >= 0.0 ? d_hi : a - t;   // a - t
            return quarter_root(tt * (1.0 - a * t) / amt) *
                   std::sqrt((b - t) / (1.0 - b * t) * (x + t) / (1.0 + x * t));
        }
    }
    return 0.0;
}

double CurveSpec::abs_dh(double t, double d_lo, double d_hi) const {
    const double a = params.a;
    switch (id) {
        case CurveId::gamma:
            return gamma_abs_dh(params, t);
        case CurveId::delta: {
            // |dh| = (1/t) / sqrt(a+1/a-t-1/t); radicand = (t-a)(1-at)/(at)
            const double tma = d_lo >= 0.0 ? d_lo : t - a;
            const double rad = tma * (1.0 - a * t) / (a * t);
            return 1.0 / (t * std::sqrt(rad));
        }
        case CurveId::sigma1: {
            // |dh| = (1/t) / sqrt(t+1/t+a+1/a); radicand = (t+a)(1+at)/(at)
            const double tt = d_lo >= 0.0 ? d_lo : t;
            const double rad = (tt + a) * (1.0 + a * tt) / (a * tt);
            return 1.0 / (tt * std::sqrt(rad));
        }
        case CurveId::sigma2: {
            // |dh| = (1/t) / sqrt(t+1/t-a-1/a); radicand = (a-t)(1-at)/(at)
            const double tt = d_lo >= 0.0 ? d_lo : t;
            const double amt = d_hi >= 0.0 ? d_hi : a - t;
            const double rad = amt * (1.0 - a * tt) / (a * tt);
            return 1.0 / (tt * std::sqrt(rad));
        }
    }
    return 0.0;
}

std::complex<double> CurveSpec::g_phase() const {
    switch (id) {
        case CurveId::gamma: return {1.0, 0.0};  // not constant; see gamma_phase()
        case CurveId::delta: return {0.0, 1.0};
        case CurveId::sigma1: return {0.0, 1.0};
        case CurveId::sigma2: return std::polar(1.0, kPi / 4.0);
    }
    return {};
}

std::complex<double> CurveSpec::dh_phase() const {
    switch (id) {
        case CurveId::gamma: return {0.0, 1.0};
        case CurveId::delta: return {1.0, 0.0};
        case CurveId::sigma1: return {1.0, 0.0};
        case CurveId::sigma2: return {0.0, -1.0};
    }
    return {};
}

CurveSpec make_curve(const SurfaceParams& p, CurveId id) {
    switch (id) {
        case CurveId::gamma: return {id, 0.0, kPi, p};
        case CurveId::delta: return {id, p.a, p.b, p};
        case CurveId::sigma1: return {id, 0.0, p.x, p};
        case CurveId::sigma2: return {id, 0.0, p.a, p};
    }
    throw std::invalid_argument("unknown curve id");
}

}  // namespace tpms::weier
