#include "tpms/branch.hpp"

#include <cmath>
#include <functional>

namespace tpms::weier {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Branch points of g as a function of z (zeros/poles of g^4 of order not
// divisible by 4 all lie on the real axis).
std::array<Complex, 7> g_branch_points(const SurfaceParams& p) {
    return {Complex(0.0), Complex(p.a), Complex(1.0 / p.a), Complex(p.b),
            Complex(1.0 / p.b), Complex(-p.x), Complex(-1.0 / p.x)};
}

// Zeros/pole of the radicand r(z) = z + 1/z - a - 1/a.
std::array<Complex, 3> dh_branch_points(const SurfaceParams& p) {
    return {Complex(0.0), Complex(p.a), Complex(1.0 / p.a)};
}

template <size_t N>
void require_off_locus(const std::array<Complex, N>& locus, Complex z,
                       double exclusion, const char* what) {
    for (const auto& w : locus)
        if (std::abs(z - w) <= exclusion)
            throw SingularPointError(what, z);
}

double principal_diff(Complex next, Complex cur) {
    // argument increment in (-pi, pi]
    return std::arg(next / cur);
}

}  // namespace

std::array<Complex, 4> moebius_factors(const SurfaceParams& p, Complex z) {
    return {z, (1.0 - p.a * z) / (z - p.a), (p.b - z) / (p.b * z - 1.0),
            (z + p.x) / (p.x * z + 1.0)};
}

Complex g4_rhs(const SurfaceParams& p, Complex z) {
    const auto f = moebius_factors(p, z);
    return f[0] * f[1] * f[2] * f[2] * f[3] * f[3];
}

BranchState g_anchor(const SurfaceParams& p) {
    (void)p;
    BranchState s;
    s.z = Complex(1.0, 0.0);
    s.args = {0.0, 0.0, 0.0, 0.0};
    s.g = Complex(1.0, 0.0);
    return s;
}

namespace {

// weights of the factor arguments in arg g
constexpr std::array<double, 4> kW = {0.25, 0.25, 0.5, 0.5};

Complex g_from_args(const SurfaceParams& p, Complex z,
                    const std::array<double, 4>& args) {
    const auto f = moebius_factors(p, z);
    double mod = 1.0, arg = 0.0;
    for (int k = 0; k < 4; ++k) {
        mod *= std::pow(std::abs(f[k]), kW[k]);
        arg += kW[k] * args[k];
    }
    return std::polar(mod, arg);
}

BranchState step_g(const SurfaceParams& p, const BranchState& from, Complex z_next,
                   double exclusion, int depth) {
    if (depth > 60)
        throw ContinuationError("branch continuation failed to subdivide; "
                                "path passes too close to a branch point");
    require_off_locus(g_branch_points(p), z_next, exclusion,
                      "continuation target on the branch locus of g");
    const auto f_cur = moebius_factors(p, from.z);
    const auto f_next = moebius_factors(p, z_next);
    std::array<double, 4> d{};
    bool small = true;
    for (int k = 0; k < 4; ++k) {
        d[k] = principal_diff(f_next[k], f_cur[k]);
        if (std::abs(d[k]) >= 0.5 * kPi) small = false;
    }
    if (!small) {
        const Complex mid = 0.5 * (from.z + z_next);
        BranchState half = step_g(p, from, mid, exclusion, depth + 1);
        return step_g(p, half, z_next, exclusion, depth + 1);
    }
    BranchState out;
    out.z = z_next;
    for (int k = 0; k < 4; ++k) out.args[k] = from.args[k] + d[k];
    out.g = g_from_args(p, z_next, out.args);
    return out;
}

}  // namespace

BranchState continue_g(const SurfaceParams& p, const BranchState& from,
                       Complex z_next, double exclusion) {
    return step_g(p, from, z_next, exclusion, 0);
}

BranchState eval_g(const SurfaceParams& p, const BranchState& state, Complex z_next) {
    // public operation also rejects the corner points +-1 listed in the
    // real-axis locus (they are regular for g but sit where symmetry curves
    // cross; callers use the curve pullbacks there)
    if (std::abs(z_next - 1.0) <= 1e-9 || std::abs(z_next + 1.0) <= 1e-9)
        throw SingularPointError("eval_g target at z=+-1", z_next);
    return continue_g(p, state, z_next);
}

BranchState eval_g_from_anchor(const SurfaceParams& p, Complex z) {
    BranchState s = g_anchor(p);
    const Complex i(0.0, 1.0);
    if (std::abs(z - 1.0) < 1e-14) return s;
    s = continue_g(p, s, i);
    if (std::abs(z - i) < 1e-14) return s;
    return continue_g(p, s, z);
}

DhBranchState dh_anchor(const SurfaceParams& p) {
    (void)p;
    // r(i) = -(a + 1/a) is on the negative real axis; fix arg r = +pi there.
    return DhBranchState{Complex(0.0, 1.0), kPi};
}

namespace {

Complex radicand(const SurfaceParams& p, Complex z) {
    return z + 1.0 / z - p.a - 1.0 / p.a;
}

DhBranchState step_dh(const SurfaceParams& p, const DhBranchState& from,
                      Complex z_next, double exclusion, int depth) {
    if (depth > 60)
        throw ContinuationError("dh continuation failed to subdivide; "
                                "path passes too close to a zero of v");
    require_off_locus(dh_branch_points(p), z_next, exclusion,
                      "dh continuation target at a singular point of v/z");
    const double d = principal_diff(radicand(p, z_next), radicand(p, from.z));
    if (std::abs(d) >= 0.5 * kPi) {
        const Complex mid = 0.5 * (from.z + z_next);
        DhBranchState half = step_dh(p, from, mid, exclusion, depth + 1);
        return step_dh(p, half, z_next, exclusion, depth + 1);
    }
    return DhBranchState{z_next, from.r_arg + d};
}

}  // namespace

DhBranchState continue_dh(const SurfaceParams& p, const DhBranchState& from,
                          Complex z_next, double exclusion) {
    return step_dh(p, from, z_next, exclusion, 0);
}

Complex dh_density(const SurfaceParams& p, const DhBranchState& state) {
    const Complex w =
        std::polar(std::sqrt(std::abs(radicand(p, state.z))), 0.5 * state.r_arg);
    return Complex(0.0, 1.0) / (state.z * w);
}

Complex eval_dh(const SurfaceParams& p, Complex z, int branch_sign) {
    DhBranchState s = dh_anchor(p);
    if (std::abs(z - s.z) > 1e-14) s = continue_dh(p, s, z);
    Complex d = dh_density(p, s);
    return branch_sign >= 0 ? d : -d;
}

std::array<Complex, 3> phi_forms(Complex g, Complex dh_dens) {
    const Complex gi = 1.0 / g;
    return {0.5 * (gi - g) * dh_dens, Complex(0.0, 0.5) * (gi + g) * dh_dens,
            dh_dens};
}

std::array<Complex, 3> phi_forms(const SurfaceParams& p, const BranchState& state,
                                 int branch_sign) {
    return phi_forms(state.g, eval_dh(p, state.z, branch_sign));
}

namespace {

struct RowSpec {
    int row;
    const char* domain;
    // sample z for u in (0,1)
    std::function<Complex(const SurfaceParams&, double)> z_of;
    // 0: g real, 1: g imaginary, 2: g in e^{+-i pi/4} R, 3: |g|=1
    int g_class;
    // true: dh(zdot) real, false: imaginary
    bool dh_real;
};

double phase_dev_real(Complex v) { return std::abs(std::sin(std::arg(v))); }
double phase_dev_imag(Complex v) { return std::abs(std::cos(std::arg(v))); }

}  // namespace

InvolutionReport involution_table_check(const SurfaceParams& p, int samples_per_row,
                                        double tol) {
    const double m = 0.02;  // stay away from the singular corner points
    std::vector<RowSpec> rows = {
        {1, "-1<z<-x",
         [m](const SurfaceParams& q, double u) {
             return Complex(-(q.x + (m + (1 - 2 * m) * u) * (1.0 - q.x)), 0.0);
         },
         0, true},
        {2, "-x<z<0",
         [m](const SurfaceParams& q, double u) {
             return Complex(-(m + (1 - 2 * m) * u) * q.x, 0.0);
         },
         1, true},
        {3, "0<z<a",
         [m](const SurfaceParams& q, double u) {
             return Complex((m + (1 - 2 * m) * u) * q.a, 0.0);
         },
         2, false},
        {4, "a<z<b",
         [m](const SurfaceParams& q, double u) {
             return Complex(q.a + (m + (1 - 2 * m) * u) * (q.b - q.a), 0.0);
         },
         1, true},
        {5, "b<z<1",
         [m](const SurfaceParams& q, double u) {
             return Complex(q.b + (m + (1 - 2 * m) * u) * (1.0 - q.b), 0.0);
         },
         0, true},
        {6, "z in S^1",
         [m](const SurfaceParams& q, double u) {
             (void)q;
             return std::polar(1.0, (m + (1 - 2 * m) * u) * kPi);
         },
         3, false},
    };

    InvolutionReport report;
    report.all_pass = true;
    for (const auto& spec : rows) {
        InvolutionRowReport rr;
        rr.row = spec.row;
        rr.domain = spec.domain;
        for (int i = 0; i < samples_per_row; ++i) {
            const double u = (i + 0.5) / samples_per_row;
            const Complex z = spec.z_of(p, u);
            const BranchState st = eval_g_from_anchor(p, z);
            const Complex dh = eval_dh(p, z);
            // dh(zdot): zdot = 1 on real segments, iz on the circle
            const Complex dh_dir = (spec.row == 6) ? dh * (Complex(0, 1) * z) : dh;

            double gdev = 0.0;
            switch (spec.g_class) {
                case 0: gdev = phase_dev_real(st.g); break;
                case 1: gdev = phase_dev_imag(st.g); break;
                case 2: {
                    const double c = std::cos(2.0 * std::arg(st.g));
                    gdev = std::abs(c);  // cos(2 arg) = 0 on e^{+-i pi/4} R
                    if (rr.observed_sign == 0)
                        rr.observed_sign = std::sin(2.0 * std::arg(st.g)) > 0 ? 1 : -1;
                    break;
                }
                case 3: gdev = std::abs(std::abs(st.g) - 1.0); break;
            }
            const double dhdev =
                spec.dh_real ? phase_dev_real(dh_dir) : phase_dev_imag(dh_dir);
            rr.max_g_dev = std::max(rr.max_g_dev, gdev);
            rr.max_dh_dev = std::max(rr.max_dh_dev, dhdev);
        }
        rr.pass = rr.max_g_dev <= tol && rr.max_dh_dev <= tol;
        report.all_pass = report.all_pass && rr.pass;
        report.rows.push_back(rr);
    }
    return report;
}

}  // namespace tpms::weier
