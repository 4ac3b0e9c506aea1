// period.hpp -- the two period residuals, the special values alpha and x_a,
// the root b(a,x), and the tracer for the one-parameter solution curve.
#pragma once

#include <stdexcept>
#include <vector>

#include "tpms/params.hpp"

namespace tpms::period {

// Default tolerances: residual in the integrals, parameter in root brackets.
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kParamTol = 1e-8;

struct PeriodResidual {
    double i_gamma = 0.0;
    double i_delta = 0.0;
    double i_sigma = 0.0;
};

// I_gamma = int_0^pi Re g(t) dt / sqrt(a+1/a-2cos t)  (branch with g(1)=1).
double i_gamma(const SurfaceParams& p);

// Limit forms of I_gamma at b=1 and b=a; defined for 0<a<1, 0<=x<=1.
double i_gamma_limit_b1(double a, double x);
double i_gamma_limit_ba(double a, double x);

// I_delta = 1/2 int_a^b (|g|^{-1} - |g|) |dh|.
double i_delta(const SurfaceParams& p);

// J1 = 1/2 int_0^x (|g|^{-1} - |g|) |dh|   (first sigma stretch, z=-t)
// J2 = sqrt(2)/4 int_0^a (|g|^{-1} + |g|) |dh|  (second stretch, z=t)
double sigma_j1(const SurfaceParams& p);
double sigma_j2(const SurfaceParams& p);

// I_sigma = J1 - J2.
double i_sigma(const SurfaceParams& p);

PeriodResidual residuals(const SurfaceParams& p);

// The homology relation between the three residuals as defined above:
//   i_delta - i_gamma = i_sigma
// (one closed contour around the boundary of the upper half disk). The
// returned defect is i_delta - i_gamma - i_sigma.
double additivity_defect(const SurfaceParams& p);

// The scaled a->0 limit of I_gamma|_{b=1}:  -int_0^pi Im sqrt((z+x)/(xz+1)) dt.
double eq22_integral(double x);

class NoRootError : public std::runtime_error {
public:
    NoRootError(const std::string& what, double f_lo, double f_hi)
        : std::runtime_error(what), f_lo(f_lo), f_hi(f_hi) {}
    double f_lo, f_hi;
};

// Unique b in (a,1) with I_gamma(a,b,x)=0, for (a,x) in the region R where
// I_gamma|_{b=1} <= 0. Bracketing root search (I_gamma decreases in b).
double solve_b(double a, double x, double tol = kParamTol);

// Membership in R = {(a,x): x <= x_a}, decided by the sign of the b=1 limit.
bool in_region(double a, double x);

// The unique a = alpha in (0,1) where I_gamma|_{(b,x)=(1,0)} vanishes.
double alpha(double tol = kParamTol);

// For a < alpha, the unique x = x_a with I_gamma|_{b=1} = 0.
double x_a(double a, double tol = kParamTol);

struct FamilyCurvePoint {
    double s = 0.0;  // normalized chord length along the curve, 0 at (0,1,1) end
    SurfaceParams params;
    PeriodResidual residual;
};

class TraceError : public std::runtime_error {
public:
    TraceError(const std::string& what, std::vector<FamilyCurvePoint> partial)
        : std::runtime_error(what), partial(std::move(partial)) {}
    std::vector<FamilyCurvePoint> partial;
};

// Trace the solution curve: points where both |i_gamma| and |i_delta| fall
// below `tol`, marching the solved x down to 0. The first point sits at
// a = a_min (close to the (0,1,1) end), the last at x = 0, i.e. (a*, b*, 0).
std::vector<FamilyCurvePoint> trace_family_curve(int n_points,
                                                 double tol = 1e-9,
                                                 double a_min = 1e-3);

// ---- closed-form identity checks ----------------------------------------

struct IdentityReport {
    double max_arg_identity_dev = 0.0;   // tan Arg{z(1-az)/(z-a)} identity
    double max_im_identity_dev = 0.0;    // Im{z^3(1/a-z)/(z/a-1)} identity
    double max_num_factor_dev = 0.0;     // a=1/2 numerator factorization
    double t0_zero_residual = 0.0;       // 2cos t0 - cos 2t0 at t0=arccos((1-sqrt3)/2)
    double t0_from_scan_dev = 0.0;       // |scanned zero - closed form|
    bool pass = false;
};

IdentityReport lemma_identities_check(int n_samples = 100, double tol = 1e-10,
                                      unsigned seed = 20240817u);

}  // namespace tpms::period
