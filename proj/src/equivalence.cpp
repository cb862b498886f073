#include "fracrelax/equivalence.hpp"

#include <cmath>
#include <stdexcept>

#include "fracrelax/gamma.hpp"
#include "fracrelax/relaxation.hpp"

namespace fracrelax {

namespace {

// Adaptive Simpson with Richardson acceptance. The classical one-step update
// of log(psi) over an interval is exactly a Simpson panel of r; local error
// above tolerance rejects the step and bisects.
double simpson_adaptive(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double split = left + right;
    const double est = (split - whole) / 15.0;
    if (std::fabs(est) <= tol || depth >= 40) {
        return split; // keep the plain fourth-order panel; est only gates it
    }
    return simpson_adaptive(f, a, m, fa, flm, fm, 0.5 * tol, depth + 1) +
           simpson_adaptive(f, m, b, fm, frm, fb, 0.5 * tol, depth + 1);
}

double integrate_rate(const std::function<double(double)>& f, double a, double b,
                      double tol) {
    return simpson_adaptive(f, a, b, f(a), f(0.5 * (a + b)), f(b), tol, 0);
}

} // namespace

void CoefficientProfile::validate() const {
    if (!evaluator) {
        throw std::invalid_argument("CoefficientProfile: missing evaluator");
    }
    if (!(small_t_exponent > -1.0 && small_t_exponent <= 0.0)) {
        throw std::invalid_argument(
            "CoefficientProfile: small_t_exponent must lie in (-1, 0]");
    }
}

CoefficientProfile CoefficientProfile::relaxation(double alpha, const SolverConfig& cfg) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("CoefficientProfile: alpha must lie in (0, 1]");
    }
    CoefficientProfile p;
    p.evaluator = [alpha, cfg](double t) { return relax_coeff(alpha, t, cfg).value; };
    p.small_t_exponent = alpha - 1.0;
    p.small_t_constant = reciprocal_gamma(alpha);
    return p;
}

CoefficientProfile CoefficientProfile::constant(double value) {
    if (!(value > 0.0)) {
        throw std::invalid_argument("CoefficientProfile: constant rate must be positive");
    }
    CoefficientProfile p;
    p.evaluator = [value](double) { return value; };
    p.small_t_exponent = 0.0;
    p.small_t_constant = value;
    return p;
}

QuadResult cumulative_R(const CoefficientProfile& profile, double t, double tol) {
    profile.validate();
    if (!(t >= 0.0)) {
        throw std::invalid_argument("cumulative_R: requires t >= 0");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("cumulative_R: requires tol > 0");
    }
    if (t == 0.0) {
        return {0.0, 0.0, true, 0};
    }

    const double p1 = profile.small_t_exponent + 1.0; // in (0, 1]
    const double head = std::min(t, 1.0);
    const auto& r = profile.evaluator;

    // u = s^{p+1} maps r(s) ds to a bounded integrand: near zero it tends to
    // small_t_constant / (p+1).
    const auto substituted = [&r, p1](double u) {
        const double s = std::pow(u, 1.0 / p1);
        return r(s) * std::pow(u, 1.0 / p1 - 1.0) / p1;
    };

    QuadResult total = integrate(substituted, 0.0, std::pow(head, p1), 0.5 * tol);
    if (t > head) {
        const QuadResult rest = integrate(r, head, t, 0.5 * tol);
        total.value += rest.value;
        total.err_estimate += rest.err_estimate;
        total.converged = total.converged && rest.converged;
        total.evaluations += rest.evaluations;
    }
    return total;
}

RelaxationTrajectory ode_solve(const CoefficientProfile& profile, const TimeGrid& grid,
                               double start_value, double log_tol) {
    profile.validate();
    if (!(start_value > 0.0)) {
        throw std::invalid_argument("ode_solve: start_value must be positive");
    }
    if (!(log_tol > 0.0)) {
        throw std::invalid_argument("ode_solve: log_tol must be positive");
    }

    const std::size_t n = grid.size();
    const double span = grid.back() - grid.front();
    std::vector<double> y(n);
    y[0] = start_value;

    std::size_t j = 0;
    if (grid.front() == 0.0 && profile.small_t_exponent < 0.0) {
        // the coefficient is singular at 0: cross the first interval with
        // the exponential-integrator step
        const QuadResult r1 = cumulative_R(profile, grid[1], 0.25 * log_tol);
        y[1] = start_value * std::exp(-r1.value);
        j = 1;
    }
    for (; j + 1 < n; ++j) {
        const double a = grid[j];
        const double b = grid[j + 1];
        const double tol_step = log_tol * (b - a) / span;
        const double delta = integrate_rate(profile.evaluator, a, b, tol_step);
        y[j + 1] = y[j] * std::exp(-delta);
    }

    return {0.0, grid, std::move(y), {}, {}, {}, Provenance::OdeEquivalent};
}

EquivalenceReport equivalence_check(double alpha, const TimeGrid& grid, double tol) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("equivalence_check: alpha must lie in (0, 1]");
    }
    const CoefficientProfile profile = CoefficientProfile::relaxation(alpha);
    const RelaxationTrajectory traj = ode_solve(profile, grid, 1.0, tol);

    EquivalenceReport report;
    report.alpha = alpha;
    report.grid = grid;
    report.per_point_deviation.resize(grid.size());
    report.routes_compared = {Provenance::OdeEquivalent, Provenance::ClosedForm};
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double reference = (grid[i] == 0.0) ? 1.0 : psi(alpha, grid[i]).value;
        const double dev = std::fabs(traj.psi_vals[i] - reference);
        report.per_point_deviation[i] = dev;
        worst = std::max(worst, dev);
    }
    report.max_abs_deviation = worst;
    return report;
}

LaplacePair laplace_check(double alpha, double s, double tol) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("laplace_check: alpha must lie in (0, 1]");
    }
    if (!(s > 0.0)) {
        throw std::invalid_argument("laplace_check: requires s > 0");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("laplace_check: requires tol > 0");
    }

    const double closed = std::pow(s, alpha - 1.0) / (std::pow(s, alpha) + 1.0);

    // Truncation point: e^{-sT}/s below tol/4 even with psi ~ 1.
    const double T = std::max(1.0, std::log(4.0 / (s * tol)) / s);

    const SolverConfig cfg;
    const auto integrand = [alpha, s, &cfg](double t) {
        return std::exp(-s * t) * psi(alpha, t, cfg).value;
    };
    const QuadResult body = integrate(integrand, 0.0, T, 0.25 * tol);

    double tail;
    if (alpha == 1.0) {
        tail = std::exp(-(s + 1.0) * T) / (s + 1.0);
    } else {
        // psi ~ t^{-a}/Gamma(1-a) - t^{-2a}/Gamma(1-2a) for large t; each term
        // transforms to an upper incomplete gamma. Gamma poles drop out.
        const double x = s * T;
        tail = reciprocal_gamma(1.0 - alpha) * std::pow(s, alpha - 1.0) *
                   upper_incomplete_gamma(1.0 - alpha, x) -
               reciprocal_gamma(1.0 - 2.0 * alpha) * std::pow(s, 2.0 * alpha - 1.0) *
                   upper_incomplete_gamma(1.0 - 2.0 * alpha, x);
        const double residual =
            std::fabs(reciprocal_gamma(1.0 - 3.0 * alpha)) *
            std::pow(s, 3.0 * alpha - 1.0) *
            std::fabs(upper_incomplete_gamma(1.0 - 3.0 * alpha, x));
        if (residual > tol) {
            throw std::runtime_error("laplace_check: tail truncation bound exceeds tol");
        }
    }
    return {body.value + tail, closed};
}

} // namespace fracrelax
