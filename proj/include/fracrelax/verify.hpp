#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracrelax/equivalence.hpp"
#include "fracrelax/figures.hpp"

namespace fracrelax {

struct CheckLine {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;
    bool all_pass() const;
};

/// Per-alpha bound on |exp(-R) - psi| and on the ode route; looser below
/// alpha = 0.3 where the coefficient singularity is strongest.
double equivalence_tolerance(double alpha);

/// R(t_j) along a grid, accumulated interval by interval (head interval via
/// cumulative_R, the rest by direct quadrature). tol is the total budget.
std::vector<double> cumulative_R_on_grid(const CoefficientProfile& profile,
                                         const std::vector<double>& ts, double tol);

/// exp(-R) vs psi, R vs -log(psi), and the ode_solve trajectory vs psi,
/// per alpha on the run grid.
SuiteReport verify_equivalence(const RunConfig& cfg);

/// Numeric Laplace transform vs s^{alpha-1}/(s^alpha+1), relative 1e-6,
/// over alphas x s in {0.5, 1, 2, 4}.
SuiteReport verify_laplace(const RunConfig& cfg);

/// solve_fde on a uniform grid of n_steps intervals vs the Mittag-Leffler
/// route, max error 1e-4 per alpha (tolerance calibrated at n_steps = 2^14).
SuiteReport verify_fde_cross_check(const RunConfig& cfg, std::size_t n_steps);

void print_report(const SuiteReport& report, std::ostream& os);

} // namespace fracrelax
