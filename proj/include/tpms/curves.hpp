// curves.hpp -- closed forms of the Weierstrass data on the symmetry curves.
//
// On the four curves used by the period problem the Gauss map has constant
// phase and an explicit modulus, and the height differential pulls back to an
// explicit positive density; everything here is given by elementary formulas
// so the period integrals never need analytic continuation.
#pragma once

#include <complex>

#include "tpms/params.hpp"

namespace tpms::weier {

enum class CurveId { gamma, delta, sigma1, sigma2 };

// Continued argument along z=e^{it}, t in [0,pi], of the Moebius-type factors
// of g^4, anchored to 0 at t=0. For kappa>0,
//   circle_factor_arg(kappa,t) = 2*atan2(kappa*sin(t/2), cos(t/2))
// is the continued argument of the circle pullback of the corresponding unit
// ratio; the three instances used below are
//   kappa=(1+a)/(1-a): arg of (z-a)/(1-az)
//   kappa=(1+b)/(1-b): arg of (b-z)/(bz-1)
//   kappa=(1-x)/(1+x): arg of (z+x)/(xz+1).
double circle_factor_arg(double kappa, double t);

// Continued argument of g(e^{it}) along the upper unit circle with the branch
// anchored by g(1)=1. |g|=1 there, so g = exp(i*gamma_phase).
double gamma_phase(const SurfaceParams& p, double t);

// Pullback density |dh| on the circle: 1/sqrt(a+1/a-2cos t), in the stable
// form 1/sqrt((1-a)^2/a + 4 sin^2(t/2)).
double gamma_abs_dh(const SurfaceParams& p, double t);

struct CurveSpec {
    CurveId id;
    double t_lo, t_hi;
    SurfaceParams params;

    std::complex<double> z_of_t(double t) const;

    // |g(z(t))| -- on gamma identically 1.
    // The singular endpoints make the raw formula cancel badly, so callers may
    // pass the exact distances of t to the curve endpoints (as provided by the
    // quadrature module); negative sentinel means "derive from t".
    double abs_g(double t, double d_lo = -1.0, double d_hi = -1.0) const;

    // |dh| density with respect to dt (positive on the open curve).
    double abs_dh(double t, double d_lo = -1.0, double d_hi = -1.0) const;

    // Constant phase of g along the curve (branch anchored at g(1)=1):
    // delta: i, sigma1: i, sigma2: e^{i pi/4}. For gamma use gamma_phase().
    std::complex<double> g_phase() const;

    // Phase of the dh pullback in the t parametrization for the anchored
    // branch of v/z: +1 on delta and sigma1, -i on sigma2, +i on gamma.
    std::complex<double> dh_phase() const;
};

CurveSpec make_curve(const SurfaceParams& p, CurveId id);

}  // namespace tpms::weier
