#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "tpms/branch.hpp"
#include "tpms/curves.hpp"

using namespace tpms;
using namespace tpms::weier;
using C = std::complex<double>;

namespace {
const SurfaceParams P = make_params(0.47, 0.85, 0.68);
const C I(0.0, 1.0);

double rel_err(C a, C b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("anchor: all four factors equal 1 at z=1, so g=1") {
    const auto f = moebius_factors(P, C(1.0));
    for (const auto& v : f) CHECK(std::abs(v - 1.0) < 1e-14);
    CHECK(std::abs(g_anchor(P).g - 1.0) < 1e-15);
}

TEST_CASE("branch consistency: g^4 matches the defining rational function") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ur(0.05, 0.95), ut(0.05, M_PI - 0.05);
    BranchState s = eval_g_from_anchor(P, C(0.0, 0.5));
    for (int k = 0; k < 200; ++k) {
        const C z = std::polar(ur(rng), ut(rng));
        s = continue_g(P, s, z);
        const C g4 = s.g * s.g * s.g * s.g;
        CHECK(rel_err(g4, g4_rhs(P, z)) < 1e-12);
    }
}

TEST_CASE("monodromy: contractible loop restores the branch") {
    BranchState s0 = eval_g_from_anchor(P, C(0.2, 0.4));
    BranchState s = s0;
    const std::vector<C> loop = {C(0.2, 0.4), C(0.6, 0.4), C(0.6, 0.8),
                                 C(0.2, 0.8), C(0.2, 0.4)};
    for (size_t i = 1; i < loop.size(); ++i) s = continue_g(P, s, loop[i]);
    CHECK(std::abs(s.g - s0.g) < 1e-10);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(s.args[k] - s0.args[k]) < 1e-10);
}

TEST_CASE("monodromy: one loop around z=b flips the sign of g") {
    const double r = 0.04;
    BranchState s0 = eval_g_from_anchor(P, C(P.b + r, 0.0) + C(0, 1e-12));
    BranchState s = s0;
    for (int k = 1; k <= 16; ++k) {
        const double th = 2.0 * M_PI * k / 16;
        s = continue_g(P, s, C(P.b, 1e-12) + std::polar(r, th));
    }
    CHECK(std::abs(s.g + s0.g) < 1e-10);  // g -> -g
}

TEST_CASE("monodromy: four loops around z=0 restore g") {
    const double r = 0.2;
    BranchState s0 = eval_g_from_anchor(P, C(r, 0.0) + C(0, 1e-12));
    BranchState s = s0;
    for (int k = 1; k <= 4 * 12; ++k) {
        const double th = 2.0 * M_PI * k / 12;
        s = continue_g(P, s, C(0.0, 1e-12) + std::polar(r, th));
    }
    CHECK(std::abs(s.g - s0.g) < 1e-9);
}

TEST_CASE("|g| = 1 on the unit circle and the phase matches the closed form") {
    for (int k = 1; k < 40; ++k) {
        const double t = M_PI * k / 40.0;
        const BranchState s = eval_g_from_anchor(P, std::polar(1.0, t));
        CHECK(std::abs(std::abs(s.g) - 1.0) < 1e-12);
        const C expected = std::polar(1.0, gamma_phase(P, t));
        CHECK(std::abs(s.g - expected) < 1e-10);
    }
}

TEST_CASE("curve pullbacks: continuation matches the closed forms") {
    // delta: g = i|g| on (a,b)
    auto delta = make_curve(P, CurveId::delta);
    for (int k = 1; k < 20; ++k) {
        const double t = P.a + (P.b - P.a) * k / 20.0;
        const BranchState s = eval_g_from_anchor(P, C(t, 0.0));
        CHECK(std::abs(s.g - I * delta.abs_g(t)) < 1e-10);
    }
    // sigma1: g = i|g| on (-x,0), z = -t
    auto s1 = make_curve(P, CurveId::sigma1);
    for (int k = 1; k < 20; ++k) {
        const double t = P.x * k / 20.0;
        const BranchState s = eval_g_from_anchor(P, C(-t, 0.0));
        CHECK(std::abs(s.g - I * s1.abs_g(t)) < 1e-10);
    }
    // sigma2: g = e^{i pi/4}|g| on (0,a)
    auto s2 = make_curve(P, CurveId::sigma2);
    const C ph = std::polar(1.0, M_PI / 4.0);
    for (int k = 1; k < 20; ++k) {
        const double t = P.a * k / 20.0;
        const BranchState s = eval_g_from_anchor(P, C(t, 0.0));
        CHECK(std::abs(s.g - ph * s2.abs_g(t)) < 1e-10);
    }
    // (b,1): g real positive; (-1,-x): g real negative
    for (int k = 1; k < 10; ++k) {
        const double t = P.b + (1.0 - P.b) * k / 10.0;
        const BranchState s = eval_g_from_anchor(P, C(t, 0.0));
        CHECK(std::abs(std::arg(s.g)) < 1e-10);
    }
    for (int k = 1; k < 10; ++k) {
        const double t = P.x + (1.0 - P.x) * k / 10.0;
        const BranchState s = eval_g_from_anchor(P, C(-t, 0.0));
        CHECK(std::abs(std::abs(std::arg(s.g)) - M_PI) < 1e-10);
    }
}

TEST_CASE("dh pullbacks: circle and real segments") {
    // circle: dh(z) * (iz) = i / sqrt(a+1/a-2cos t)  (Eq. 8 pullback)
    for (int k = 1; k < 30; ++k) {
        const double t = M_PI * k / 30.0;
        const C z = std::polar(1.0, t);
        const C pull = eval_dh(P, z) * (I * z);
        const C expected = I * gamma_abs_dh(P, t);
        CHECK(std::abs(pull - expected) < 1e-12);
    }
    // delta: dh density real positive (dh(t) = |dh(t)|)
    auto delta = make_curve(P, CurveId::delta);
    for (int k = 1; k < 20; ++k) {
        const double t = P.a + (P.b - P.a) * k / 20.0;
        const C d = eval_dh(P, C(t, 0.0));
        CHECK(std::abs(d.imag()) < 1e-12 * std::abs(d));
        CHECK(d.real() > 0.0);
        CHECK(std::abs(d - delta.abs_dh(t)) < 1e-10 * std::abs(d));
    }
    // sigma1 (z=-t): pullback dh(z(t)) * dz/dt = -dh(-t); equals +|dh(t)|
    auto s1 = make_curve(P, CurveId::sigma1);
    for (int k = 1; k < 20; ++k) {
        const double t = P.x * k / 20.0;
        const C d = eval_dh(P, C(-t, 0.0)) * C(-1.0);
        CHECK(std::abs(d.imag()) < 1e-12 * std::abs(d));
        CHECK(std::abs(d - s1.abs_dh(t)) < 1e-10 * std::abs(d));
    }
    // sigma2: density purely imaginary; the anchored branch gives -i|dh|
    auto s2 = make_curve(P, CurveId::sigma2);
    for (int k = 1; k < 20; ++k) {
        const double t = P.a * k / 20.0;
        const C d = eval_dh(P, C(t, 0.0));
        CHECK(std::abs(d.real()) < 1e-12 * std::abs(d));
        CHECK(std::abs(d - (-I) * s2.abs_dh(t)) < 1e-10 * std::abs(d));
    }
    // (b,1) and (-1,-x): density real (dh(zdot) in R per the involution table)
    for (int k = 1; k < 10; ++k) {
        const double t = P.b + (1.0 - P.b) * k / 10.0;
        CHECK(std::abs(eval_dh(P, C(t, 0.0)).imag()) <
              1e-12 * std::abs(eval_dh(P, C(t, 0.0))));
        const double u = P.x + (1.0 - P.x) * k / 10.0;
        CHECK(std::abs(eval_dh(P, C(-u, 0.0)).imag()) <
              1e-12 * std::abs(eval_dh(P, C(-u, 0.0))));
    }
}

TEST_CASE("phi forms") {
    // phi3 is the dh density exactly
    const C z(0.3, 0.55);
    const BranchState s = eval_g_from_anchor(P, z);
    const auto phi = phi_forms(P, s);
    CHECK(phi[2] == eval_dh(P, z));

    // on gamma, Re(phi3 dz) = 0 (dh pullback purely imaginary)
    for (int k = 1; k < 10; ++k) {
        const double t = M_PI * k / 10.0;
        const C zz = std::polar(1.0, t);
        const C pull = eval_dh(P, zz) * (I * zz);
        CHECK(std::abs(pull.real()) < 1e-13);
    }

    // z real in (b,1): phi2 purely imaginary
    for (int k = 1; k < 10; ++k) {
        const double t = P.b + (1.0 - P.b) * k / 10.0;
        const BranchState st = eval_g_from_anchor(P, C(t, 0.0));
        const auto ph = phi_forms(P, st);
        CHECK(std::abs(ph[1].real()) < 1e-12 * std::abs(ph[1]));
    }

    // direct substitution: g = i, density d -> phi1 = -i d
    const C d(0.7, -0.2);
    const auto direct = phi_forms(C(0.0, 1.0), d);
    CHECK(std::abs(direct[0] - (-I * d)) < 1e-15);
}

TEST_CASE("eval_g rejects the branch locus; step subdivision is internal") {
    BranchState s = eval_g_from_anchor(P, C(0.5, 0.5));
    CHECK_THROWS_AS((void)eval_g(P, s, C(P.a, 0.0)), SingularPointError);
    CHECK_THROWS_AS((void)eval_g(P, s, C(1.0, 0.0)), SingularPointError);
    // a long step must still land on the right sheet (internal subdivision)
    const BranchState far = continue_g(P, s, C(-0.9, 0.02));
    const BranchState ref = eval_g_from_anchor(P, C(-0.9, 0.02));
    CHECK(std::abs(far.g - ref.g) < 1e-10);
}

TEST_CASE("involution table check passes for two triples") {
    const auto rep = involution_table_check(P);
    CHECK(rep.all_pass);
    CHECK(rep.rows.size() == 6);
    for (const auto& row : rep.rows) {
        CHECK(row.pass);
        CHECK(row.max_g_dev <= 1e-10);
        CHECK(row.max_dh_dev <= 1e-10);
    }
    // row 3 records which sqrt(i) sign the anchored branch lands on
    CHECK(rep.rows[2].observed_sign == 1);

    const auto rep2 = involution_table_check(make_params(0.15, 0.80, 0.74));
    CHECK(rep2.all_pass);
}

TEST_CASE("conjugation symmetry: g(conj z) relates to conj(g(z)) by a unit") {
    // row 5 involution (z,g)->(conj z, conj g): continuation into the lower
    // half plane across (b,1) must satisfy g(conj z) = conj(g(z)).
    const C z(0.4, 0.3);
    BranchState s_up = eval_g_from_anchor(P, z);
    // continue down across the segment (b,1)
    BranchState s = eval_g_from_anchor(P, C(0.5 * (P.b + 1.0), 0.1));
    s = continue_g(P, s, C(0.5 * (P.b + 1.0), -0.1));
    s = continue_g(P, s, std::conj(z));
    CHECK(std::abs(s.g - std::conj(s_up.g)) < 1e-10);
}
