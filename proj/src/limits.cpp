#include "tpms/limits.hpp"

#include <cmath>
#include <stdexcept>

#include "tpms/branch.hpp"

namespace tpms::limits {

namespace {

// dh^2 as a dz^2-density: dh^2 = -dz^2 / (z (z-a)(z-1/a)).
Complex dh_squared(double a, Complex z) {
    return -1.0 / (z * (z - a) * (z - 1.0 / a));
}

}  // namespace

double scherk_gap(const SurfaceParams& p, const std::vector<Complex>& u_samples) {
    double gap_g = 0.0, gap_dh = 0.0;
    for (const Complex& u : u_samples) {
        if (std::abs(u - 1.0) < 0.1)
            throw std::domain_error("scherk_gap: sample too close to u=1");
        const Complex z = p.a * u / (u - 1.0);
        gap_g = std::max(gap_g, std::abs(weier::g4_rhs(p, z) - u));

        // dh^2/a pulled back to the u chart: multiply by (dz/du)^2. The limit
        // density has a pole at u=0 (puncture of the limit data), so the dh
        // comparison runs on the compact away from it; g^4 -> u is still
        // checked there (both sides vanish at u=0).
        if (std::abs(u) < 0.05) continue;
        const Complex dzdu = -p.a / ((u - 1.0) * (u - 1.0));
        const Complex lhs = dh_squared(p.a, z) * dzdu * dzdu / p.a;
        const Complex rhs = 1.0 / (u * (u - 1.0) * (u - 1.0));
        gap_dh = std::max(gap_dh, std::abs(lhs - rhs));
    }
    return gap_g + gap_dh;
}

double hw_gap(const SurfaceParams& p, double a_star, double b_star,
              const std::vector<Complex>& z_samples) {
    double gap_g = 0.0, gap_dh = 0.0;
    for (const Complex& z : z_samples) {
        if (!(std::abs(z) < 1.0) || !(z.imag() > 0.0) || std::abs(z) < 0.05)
            throw std::domain_error("hw_gap: sample outside the half disk minus 0");
        const Complex lim = z * z * z * (1.0 - a_star * z) / (z - a_star) *
                            ((b_star - z) / (b_star * z - 1.0)) *
                            ((b_star - z) / (b_star * z - 1.0));
        gap_g = std::max(gap_g, std::abs(weier::g4_rhs(p, z) - lim));
        gap_dh = std::max(gap_dh,
                          std::abs(dh_squared(p.a, z) - dh_squared(a_star, z)));
    }
    return gap_g + gap_dh;
}

std::vector<Complex> default_scherk_samples() {
    std::vector<Complex> out;
    for (int i = -4; i <= 4; ++i) {
        for (int j = -4; j <= 4; ++j) {
            const Complex u(0.5 * i, 0.5 * j);
            if (std::abs(u) <= 2.0 && std::abs(u - 1.0) >= 0.3) out.push_back(u);
        }
    }
    return out;
}

std::vector<Complex> default_hw_samples() {
    std::vector<Complex> out;
    for (int k = 0; k < 24; ++k) {
        const double t = 0.2 + (M_PI - 0.4) * k / 23.0;
        const Complex z = 0.5 * std::polar(1.0, t);
        if (z.imag() >= 0.1) out.push_back(z);
    }
    return out;
}

}  // namespace tpms::limits
