#include "tpms/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace tpms::quad {

namespace {

// Gauss-Legendre rule on [-1,1], nodes computed once by Newton iteration on
// the Legendre recurrence (machine precision, no tabulated constants).
struct GaussRule {
    std::vector<double> node;
    std::vector<double> weight;
};

GaussRule make_gauss(int n) {
    GaussRule r;
    r.node.resize(n);
    r.weight.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-16) break;
        }
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        r.node[i] = t;
        r.weight[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return r;
}

const GaussRule& coarse_rule() {
    static const GaussRule r = make_gauss(7);
    return r;
}
const GaussRule& fine_rule() {
    static const GaussRule r = make_gauss(15);
    return r;
}

template <class V>
double vnorm(const V& v) {
    if constexpr (std::is_same_v<V, double>)
        return std::abs(v);
    else
        return std::abs(v);
}

template <class V>
bool vfinite(const V& v) {
    if constexpr (std::is_same_v<V, double>)
        return std::isfinite(v);
    else
        return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// One mapped sub-integral: value-type V integrand of the transformed variable.
template <class V>
struct Engine {
    std::function<V(double)> f;  // transformed integrand, inclusive of jacobian
    double abs_tol;
    double rel_tol;
    int max_depth;
    std::int64_t evals = 0;
    double err_total = 0.0;
    bool budget_exceeded = false;

    V panel(double lo, double hi, const GaussRule& r) {
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        V sum{};
        for (size_t i = 0; i < r.node.size(); ++i) {
            const double t = c + h * r.node[i];
            V v = f(t);
            ++evals;
            if (!vfinite(v))
                throw EvaluationError("integrand returned a non-finite value", t);
            sum += r.weight[i] * v;
        }
        return h * sum;
    }

    V run(double lo, double hi, double tol, int depth) {
        V g7 = panel(lo, hi, coarse_rule());
        V g15 = panel(lo, hi, fine_rule());
        double err = vnorm(g15 - g7);
        // floor: do not chase noise below machine precision of the panel value
        double floor = 4e-16 * vnorm(g15) + 1e-300;
        if (err <= std::max(tol, floor) || depth >= max_depth) {
            if (err > std::max(tol, floor)) budget_exceeded = true;
            err_total += err;
            return g15;
        }
        double mid = 0.5 * (lo + hi);
        V left = run(lo, mid, 0.5 * tol, depth + 1);
        V right = run(mid, hi, 0.5 * tol, depth + 1);
        return left + right;
    }
};

int subst_power(SingularitySpec::Subst s) {
    switch (s) {
        case SingularitySpec::Subst::sqrt_shift: return 2;
        case SingularitySpec::Subst::quartic_shift: return 4;
        default: return 1;
    }
}

void validate_spec(const SingularitySpec& s) {
    if (!(s.exponent > -1.0))
        throw std::invalid_argument("endpoint exponent must be > -1 (integrable)");
    const int p = subst_power(s.subst);
    // p*(1+e) >= 1 is what makes the transformed integrand bounded
    if (s.subst != SingularitySpec::Subst::none &&
        s.subst != SingularitySpec::Subst::linear_scale &&
        p * (1.0 + s.exponent) < 1.0 - 1e-12) {
        std::ostringstream os;
        os << "substitution power " << p << " too weak for endpoint exponent "
           << s.exponent;
        throw std::invalid_argument(os.str());
    }
}

struct MappedPiece {
    // integrate g(u) du over [u_lo, u_hi]
    std::function<double(double)> g;
    double u_lo, u_hi;
};

// Build the transformed pieces for one original interval [lo,hi] whose
// singular endpoints carry the given specs.
std::vector<MappedPiece> build_pieces(const Integrand& f, double lo, double hi,
                                      std::optional<SingularitySpec> lo_s,
                                      std::optional<SingularitySpec> hi_s) {
    if (!(hi > lo)) throw std::invalid_argument("integrate: requires hi > lo");
    if (lo_s) {
        if (lo_s->end != SingularitySpec::End::lower)
            throw std::invalid_argument("lo spec must have End::lower");
        validate_spec(*lo_s);
    }
    if (hi_s) {
        if (hi_s->end != SingularitySpec::End::upper)
            throw std::invalid_argument("hi spec must have End::upper");
        validate_spec(*hi_s);
    }

    const double len = hi - lo;
    auto lower_piece = [&](double seg_hi, const SingularitySpec& s) {
        const int p = subst_power(s.subst);
        const double L = seg_hi - lo;
        if (s.subst == SingularitySpec::Subst::none ||
            s.subst == SingularitySpec::Subst::linear_scale) {
            // linear_scale: t = lo + L*u on [0,1]
            return MappedPiece{[f, lo, hi, L](double u) {
                                   const double d = L * u;
                                   return f(lo + d, d, (hi - lo) - d) * L;
                               },
                               0.0, 1.0};
        }
        const double u_hi = std::pow(L, 1.0 / p);
        return MappedPiece{[f, lo, hi, p](double u) {
                               double up = 1.0;
                               for (int k = 0; k < p; ++k) up *= u;
                               double jac = p * up / u;  // p*u^{p-1}
                               return f(lo + up, up, (hi - lo) - up) * jac;
                           },
                           0.0, u_hi};
    };
    auto upper_piece = [&](double seg_lo, const SingularitySpec& s) {
        const int p = subst_power(s.subst);
        const double L = hi - seg_lo;
        if (s.subst == SingularitySpec::Subst::none ||
            s.subst == SingularitySpec::Subst::linear_scale) {
            return MappedPiece{[f, lo, hi, L](double u) {
                                   const double d = L * u;  // distance to hi
                                   return f(hi - d, (hi - lo) - d, d) * L;
                               },
                               0.0, 1.0};
        }
        const double u_hi = std::pow(L, 1.0 / p);
        return MappedPiece{[f, lo, hi, p](double u) {
                               double up = 1.0;
                               for (int k = 0; k < p; ++k) up *= u;
                               double jac = p * up / u;
                               return f(hi - up, (hi - lo) - up, up) * jac;
                           },
                           0.0, u_hi};
    };

    std::vector<MappedPiece> pieces;
    const bool lo_active = lo_s && lo_s->subst != SingularitySpec::Subst::none;
    const bool hi_active = hi_s && hi_s->subst != SingularitySpec::Subst::none;
    if (lo_active && hi_active) {
        const double mid = lo + 0.5 * len;
        pieces.push_back(lower_piece(mid, *lo_s));
        pieces.push_back(upper_piece(mid, *hi_s));
    } else if (lo_active) {
        pieces.push_back(lower_piece(hi, *lo_s));
    } else if (hi_active) {
        pieces.push_back(upper_piece(lo, *hi_s));
    } else {
        pieces.push_back(MappedPiece{
            [f, lo, hi](double t) { return f(t, t - lo, hi - t); }, lo, hi});
    }
    return pieces;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           std::optional<SingularitySpec> lo_sing,
                           std::optional<SingularitySpec> hi_sing, double abs_tol,
                           double rel_tol, int max_depth) {
    auto pieces = build_pieces(f, lo, hi, lo_sing, hi_sing);

    // First pass: a cheap whole-interval estimate sets the relative scale.
    Engine<double> probe{nullptr, abs_tol, rel_tol, max_depth};
    double rough = 0.0;
    for (auto& p : pieces) {
        probe.f = p.g;
        rough += probe.panel(p.u_lo, p.u_hi, fine_rule());
    }
    const double tol = std::max(abs_tol, rel_tol * std::abs(rough));

    Engine<double> eng{nullptr, abs_tol, rel_tol, max_depth};
    eng.evals = probe.evals;
    double value = 0.0;
    for (auto& p : pieces) {
        eng.f = p.g;
        value += eng.run(p.u_lo, p.u_hi, tol / pieces.size(), 0);
    }

    QuadratureResult res{value, eng.err_total, eng.evals};
    if (eng.budget_exceeded &&
        eng.err_total > std::max(abs_tol, rel_tol * std::abs(value))) {
        std::ostringstream os;
        os << "quadrature did not converge to tolerance " << abs_tol << " (error "
           << eng.err_total << " after " << eng.evals << " evaluations)";
        throw AccuracyError(os.str(), res);
    }
    return res;
}

QuadratureResult integrate_smooth(const std::function<double(double)>& f, double lo,
                                  double hi, double abs_tol, double rel_tol) {
    return integrate([&f](double t, double, double) { return f(t); }, lo, hi,
                     std::nullopt, std::nullopt, abs_tol, rel_tol);
}

std::complex<double> integrate_path(
    const std::function<std::complex<double>(std::complex<double>)>& density,
    const std::vector<std::complex<double>>& path, double tol,
    std::optional<SingularitySpec> start_sing,
    std::optional<SingularitySpec> end_sing) {
    if (path.size() < 2)
        throw std::invalid_argument("integrate_path: need at least two points");

    std::complex<double> total = 0.0;
    const double seg_tol = tol / static_cast<double>(path.size() - 1);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const std::complex<double> z0 = path[i], z1 = path[i + 1];
        const std::complex<double> dz = z1 - z0;
        const bool first = (i == 0), last = (i + 2 == path.size());

        // Arc parameter s in [0,1]; d0 = s and d1 = 1-s are supplied exactly so
        // points very close to a singular endpoint are formed without
        // cancellation. |z - endpoint| = d * |dz|, so a |z-z*|^e singularity is
        // an s^e one and the same power substitutions apply.
        auto eval = [&](double d0, double d1) -> std::complex<double> {
            const std::complex<double> z = (d0 <= d1) ? z0 + d0 * dz : z1 - d1 * dz;
            std::complex<double> v = density(z) * dz;
            if (!vfinite(v))
                throw EvaluationError("path density returned a non-finite value",
                                      d0);
            return v;
        };

        Engine<std::complex<double>> eng{nullptr, seg_tol, 0.0, 60};
        auto run_piece = [&](std::function<std::complex<double>(double)> g,
                             double ulo, double uhi) {
            eng.f = std::move(g);
            return eng.run(ulo, uhi, seg_tol, 0);
        };
        // integral over s in [0,S] with lower power substitution s = u^p
        auto lower_part = [&](int p, double S) {
            return run_piece(
                [&, p](double u) {
                    double up = 1.0;
                    for (int k = 0; k < p; ++k) up *= u;
                    const double jac = (u > 0.0) ? p * up / u : 0.0;
                    return eval(up, 1.0 - up) * jac;
                },
                0.0, std::pow(S, 1.0 / p));
        };
        // integral over s in [1-S,1] with upper power substitution s = 1-u^p
        auto upper_part = [&](int p, double S) {
            return run_piece(
                [&, p](double u) {
                    double up = 1.0;
                    for (int k = 0; k < p; ++k) up *= u;
                    const double jac = (u > 0.0) ? p * up / u : 0.0;
                    return eval(1.0 - up, up) * jac;
                },
                0.0, std::pow(S, 1.0 / p));
        };

        const bool lo_active =
            first && start_sing && start_sing->subst != SingularitySpec::Subst::none;
        const bool hi_active =
            last && end_sing && end_sing->subst != SingularitySpec::Subst::none;
        if (lo_active) validate_spec(*start_sing);
        if (hi_active) validate_spec(*end_sing);

        std::complex<double> seg = 0.0;
        if (lo_active && hi_active) {
            seg = lower_part(subst_power(start_sing->subst), 0.5) +
                  upper_part(subst_power(end_sing->subst), 0.5);
        } else if (lo_active) {
            seg = lower_part(subst_power(start_sing->subst), 1.0);
        } else if (hi_active) {
            seg = upper_part(subst_power(end_sing->subst), 1.0);
        } else {
            seg = run_piece([&](double s) { return eval(s, 1.0 - s); }, 0.0, 1.0);
        }
        total += seg;
    }
    return total;
}

}  // namespace tpms::quad
