// limits.hpp -- numerical checks of the two degeneration limits of the family:
// Scherk's doubly periodic surface at the s=0 end and the Hoffman-Wohlgemuth
// genus-5 data at the s=1 end.
//
// Both gaps compare single-valued quantities (g^4 and the quadratic
// differential dh^2), which sidesteps 4th-root sheet alignment entirely.
#pragma once

#include <complex>
#include <vector>

#include "tpms/params.hpp"

namespace tpms::limits {

using Complex = std::complex<double>;

// Scherk chart: z = a*u/(u-1). Returns
//   max_u |g^4(z(u)) - u|  +  max_u |dh^2/a - du^2/(u(u-1)^2)|   (u-chart densities).
// Throws std::domain_error if a sample is within 0.1 of u=1.
double scherk_gap(const SurfaceParams& p, const std::vector<Complex>& u_samples);

// Hoffman-Wohlgemuth comparison at (a*,b*): for z in a compact of the upper
// half disk minus 0,
//   max_z |g^4(z) - z^3 (1-a*z)/(z-a*) ((b*-z)/(b*z-1))^2|
//   + max_z |dh^2(z;a) - dh^2(z;a*)|   (z-chart densities).
double hw_gap(const SurfaceParams& p, double a_star, double b_star,
              const std::vector<Complex>& z_samples);

// Default sample sets: a grid on {|u| <= 2, |u-1| >= 0.3} for Scherk and the
// arc {|z| = 1/2, Im z >= 0.1} for Hoffman-Wohlgemuth.
std::vector<Complex> default_scherk_samples();
std::vector<Complex> default_hw_samples();

}  // namespace tpms::limits
