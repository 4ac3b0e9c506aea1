// branch.hpp -- branch-consistent evaluation of g, dh and the Weierstrass
// forms on the z-plane model of the surface.
//
// g is kept as a product of fractional powers of the four Moebius factors of
//   g^4 = z * (1-az)/(z-a) * [(b-z)/(bz-1)]^2 * [(z+x)/(xz+1)]^2,
// each factor carrying its own continued argument. Continuing the arguments
// factor-by-factor (instead of taking a 4th root of the product) removes the
// sheet-switch hazard when the product's argument crosses +-pi.
//
// Anchors: g(1) = 1 (all four factors equal 1 at z=1), and for the square
// root w = v/z = sqrt(z + 1/z - a - 1/a) the argument of the radicand is
// anchored to pi at z=i, which reproduces the circle pullback
// dh = i dt / sqrt(a+1/a-2cos t).
#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpms/params.hpp"

namespace tpms::weier {

using Complex = std::complex<double>;

class SingularPointError : public std::runtime_error {
public:
    SingularPointError(const std::string& what, Complex where)
        : std::runtime_error(what), where(where) {}
    Complex where;
};

class ContinuationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BranchState {
    Complex z;
    std::array<double, 4> args{};  // continued args of z, (1-az)/(z-a), (b-z)/(bz-1), (z+x)/(xz+1)
    Complex g;
};

// The four Moebius factors of Eq-type g^4 at z (in the order above).
std::array<Complex, 4> moebius_factors(const SurfaceParams& p, Complex z);

// Product z * F1 * F2^2 * F3^2 -- the right-hand side g^4 must match.
Complex g4_rhs(const SurfaceParams& p, Complex z);

// Branch anchor at z=1 where every factor equals 1, so g=1.
BranchState g_anchor(const SurfaceParams& p);

// Analytic continuation of `from` to z_next. Steps are bisected internally
// until every factor argument moves by less than pi/2; throws
// SingularPointError if the target (or a required midpoint) is within
// `exclusion` of a branch point of g.
BranchState continue_g(const SurfaceParams& p, const BranchState& from,
                       Complex z_next, double exclusion = 1e-9);

// Spec operation: continued branch state at z_next starting from `state`.
BranchState eval_g(const SurfaceParams& p, const BranchState& state, Complex z_next);

// Convenience: continuation from the anchor along the fixed path 1 -> i -> z.
BranchState eval_g_from_anchor(const SurfaceParams& p, Complex z);

// ---- height differential ----------------------------------------------

// State of the square-root branch: continued argument of the radicand
// r(z) = z + 1/z - a - 1/a.
struct DhBranchState {
    Complex z;
    double r_arg = 0.0;
};

DhBranchState dh_anchor(const SurfaceParams& p);  // z=i, arg r = pi
DhBranchState continue_dh(const SurfaceParams& p, const DhBranchState& from,
                          Complex z_next, double exclusion = 1e-9);

// Density dh/dz = i / (z * w) with w = sqrt(r) on the continued branch.
Complex dh_density(const SurfaceParams& p, const DhBranchState& state);

// Convenience continuation from the anchor along i -> z; branch_sign = -1
// selects the opposite sheet of the square root.
Complex eval_dh(const SurfaceParams& p, Complex z, int branch_sign = +1);

// ---- Weierstrass forms --------------------------------------------------

// Densities (phi1, phi2, phi3) per dz; phi3 equals the dh density exactly.
std::array<Complex, 3> phi_forms(Complex g, Complex dh_dens);
std::array<Complex, 3> phi_forms(const SurfaceParams& p, const BranchState& state,
                                 int branch_sign = +1);

// ---- involution table ----------------------------------------------------

struct InvolutionRowReport {
    int row = 0;                 // 1..6 as in the involution table
    std::string domain;          // e.g. "-1<z<-x"
    double max_g_dev = 0.0;      // worst phase deviation of g from its class
    double max_dh_dev = 0.0;     // worst deviation of dh(zdot) from R or iR
    int observed_sign = 0;       // row 3 only: +1 for e^{i pi/4}, -1 for e^{-i pi/4}
    bool pass = false;
};

struct InvolutionReport {
    std::vector<InvolutionRowReport> rows;
    bool all_pass = false;
};

InvolutionReport involution_table_check(const SurfaceParams& p,
                                        int samples_per_row = 25,
                                        double tol = 1e-10);

}  // namespace tpms::weier
