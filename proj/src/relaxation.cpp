#include "fracrelax/relaxation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracrelax {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_alpha(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": alpha must lie in (0, 1]");
    }
}

} // namespace

EvalResult psi(double alpha, double t, const SolverConfig& cfg) {
    check_alpha(alpha, "psi");
    if (!(t >= 0.0)) {
        throw std::invalid_argument("psi: requires t >= 0");
    }
    if (t == 0.0) {
        return {1.0, 0.0, Regime::ClosedForm, EvalWarning::None};
    }
    if (alpha == 1.0) {
        const double v = std::exp(-t);
        return {v, 4.0 * kEps * v, Regime::ClosedForm, EvalWarning::None};
    }
    const double z = -std::pow(t, alpha);
    EvalResult r = ml_eval({alpha, 1.0}, z, cfg);
    // rounding of t^alpha itself; |dE/dz| <= ~1.2 on the negative axis
    r.err_estimate += 3.0 * kEps * std::fabs(z);
    return r;
}

EvalResult phi(double alpha, double t, const SolverConfig& cfg) {
    check_alpha(alpha, "phi");
    if (alpha == 1.0) {
        if (!(t >= 0.0)) {
            throw std::invalid_argument("phi: requires t >= 0");
        }
        const double v = -std::exp(-t);
        return {v, 4.0 * kEps * std::fabs(v), Regime::ClosedForm, EvalWarning::None};
    }
    if (!(t > 0.0)) {
        throw std::domain_error("phi: diverges at t = 0 for alpha < 1");
    }
    const double z = -std::pow(t, alpha);
    const EvalResult e = ml_eval({alpha, alpha}, z, cfg);
    const double scale = std::pow(t, alpha - 1.0);
    const double v = -scale * e.value;
    const double err = scale * e.err_estimate + 6.0 * kEps * std::fabs(v);
    return {v, err, e.regime, e.warning};
}

EvalResult relax_coeff(double alpha, double t, const SolverConfig& cfg) {
    check_alpha(alpha, "relax_coeff");
    if (alpha == 1.0) {
        // the ratio -phi/psi collapses to the constant 1
        return {1.0, 0.0, Regime::ClosedForm, EvalWarning::None};
    }
    if (!(t > 0.0)) {
        throw std::domain_error("relax_coeff: diverges at t = 0 for alpha < 1");
    }
    const EvalResult p = phi(alpha, t, cfg);
    const EvalResult s = psi(alpha, t, cfg);
    const double v = -p.value / s.value;
    const double rel = p.err_estimate / std::fabs(p.value) + s.err_estimate / s.value;
    EvalWarning warn = (p.warning != EvalWarning::None) ? p.warning : s.warning;
    return {v, std::fabs(v) * rel + 4.0 * kEps * std::fabs(v), s.regime, warn};
}

EvalResult big_r(double alpha, double t, const SolverConfig& cfg) {
    check_alpha(alpha, "big_r");
    if (!(t >= 0.0)) {
        throw std::invalid_argument("big_r: requires t >= 0");
    }
    if (t == 0.0) {
        return {0.0, 0.0, Regime::ClosedForm, EvalWarning::None};
    }
    if (alpha == 1.0) {
        return {t, 2.0 * kEps * t, Regime::ClosedForm, EvalWarning::None};
    }
    const EvalResult s = psi(alpha, t, cfg);
    const double v = -std::log(s.value);
    return {v, s.err_estimate / s.value + 4.0 * kEps * std::fabs(v), s.regime, s.warning};
}

} // namespace fracrelax
