// quadrature.hpp -- adaptive integration with endpoint-singularity removal.
//
// All the period integrands of this project are smooth on the open interval
// but blow up like (t-t0)^e, e in {-1/2, -3/4}, at one or both endpoints.
// A declared endpoint singularity is removed exactly by a power substitution
// t = t0 +/- u^p with p matched to the exponent (p=2 kills e=-1/2, p=4 kills
// e=-3/4); what remains is integrated by an adaptive embedded Gauss pair.
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tpms::quad {

struct SingularitySpec {
    enum class End { lower, upper };
    enum class Subst {
        none,
        linear_scale,   // t = L*u, pure rescale to the unit interval
        sqrt_shift,     // t = end -/+ u^2, removes exponents e >= -1/2
        quartic_shift,  // t = end -/+ u^4, removes exponents e >= -3/4
    };
    End end = End::lower;
    double exponent = 0.0;  // integrable: must be > -1
    Subst subst = Subst::none;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Requested accuracy could not be met within the subdivision budget.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_estimate(best) {}
    QuadratureResult best_estimate;
};

// The integrand produced a NaN; `location` is the offending abscissa.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double location)
        : std::runtime_error(what), location(location) {}
    double location;
};

// Integrand signature: f(t, d_lo, d_hi) where d_lo = t - lo and d_hi = hi - t
// are supplied exactly (computed in the transformed variable, so they stay
// accurate even when t - lo underflows below machine precision relative to t).
// Plain f(t) integrands can ignore the distances.
using Integrand = std::function<double(double t, double d_lo, double d_hi)>;

QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           std::optional<SingularitySpec> lo_sing,
                           std::optional<SingularitySpec> hi_sing,
                           double abs_tol = 1e-10, double rel_tol = 1e-8,
                           int max_depth = 60);

// Convenience wrapper for smooth integrands.
QuadratureResult integrate_smooth(const std::function<double(double)>& f, double lo,
                                  double hi, double abs_tol = 1e-10,
                                  double rel_tol = 1e-8);

// Complex line integral of `density` (a dz-density) along a polyline.
// Endpoint singularities of the whole path may be declared; interior vertices
// must be regular. Additive under path concatenation to within 2*tol.
std::complex<double> integrate_path(
    const std::function<std::complex<double>(std::complex<double>)>& density,
    const std::vector<std::complex<double>>& path, double tol,
    std::optional<SingularitySpec> start_sing = std::nullopt,
    std::optional<SingularitySpec> end_sing = std::nullopt);

}  // namespace tpms::quad
