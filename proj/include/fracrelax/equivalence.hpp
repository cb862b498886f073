#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fracrelax/mittag_leffler.hpp"
#include "fracrelax/quadrature.hpp"
#include "fracrelax/time_grid.hpp"

namespace fracrelax {

/// A positive relaxation rate r(t) with its leading small-time behaviour
/// r(t) ~ c t^p, p in (-1, 0], which keeps R(t) = int_0^t r integrable.
struct CoefficientProfile {
    std::function<double(double)> evaluator;
    double small_t_exponent = 0.0; // p
    double small_t_constant = 1.0; // c

    /// r_alpha(t) = -phi/psi built from the Mittag-Leffler evaluators;
    /// p = alpha - 1, c = 1/Gamma(alpha).
    static CoefficientProfile relaxation(double alpha, const SolverConfig& cfg = {});
    static CoefficientProfile constant(double value);
    void validate() const;
};

struct EquivalenceReport {
    double alpha = 1.0;
    TimeGrid grid = TimeGrid::uniform(0.0, 1.0, 2);
    double max_abs_deviation = 0.0;
    std::vector<double> per_point_deviation;
    std::pair<Provenance, Provenance> routes_compared{Provenance::OdeEquivalent,
                                                      Provenance::ClosedForm};
};

/// R(t) = int_0^t r(t') dt'. The head [0, min(1, t)] is integrated in the
/// substituted variable u = s^{p+1}, which turns every c t^{p+k(p+1)}-type
/// term into a smooth one; the rest is plain adaptive quadrature.
QuadResult cumulative_R(const CoefficientProfile& profile, double t, double tol);

/// Integrates d(log psi)/dt = -r(t) across the grid: per-interval Simpson
/// quadrature of r with local error control (rejected steps are bisected),
/// exponentiated into psi. A grid starting at 0 with singular r crosses the
/// first interval with the exponential-integrator step exp(-R(t_1)).
/// log_tol is the total absolute budget on log psi.
RelaxationTrajectory ode_solve(const CoefficientProfile& profile, const TimeGrid& grid,
                               double start_value, double log_tol = 1e-9);

/// Builds r_alpha, integrates the first-order equation, and compares with
/// the Mittag-Leffler route pointwise.
EquivalenceReport equivalence_check(double alpha, const TimeGrid& grid, double tol);

struct LaplacePair {
    double numeric;     // int_0^inf e^{-st} psi_alpha(t) dt by quadrature + tail model
    double closed_form; // s^{alpha-1} / (s^alpha + 1)
};

/// Laplace-transform identity check at real s > 0. The [T, inf) tail is
/// modelled with the algebraic decay of psi through incomplete gamma
/// functions; T is chosen so the model residual is below tol.
LaplacePair laplace_check(double alpha, double s, double tol);

} // namespace fracrelax
