#include "fracrelax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "fracrelax/frac_solver.hpp"
#include "fracrelax/relaxation.hpp"

namespace fracrelax {

namespace {

std::string alpha_tag(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "alpha=%g", alpha);
    return buf;
}

CheckLine make_line(std::string name, double measured, double tol) {
    return {std::move(name), measured, tol, measured < tol};
}

} // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const CheckLine& l) { return l.pass; });
}

double equivalence_tolerance(double alpha) {
    return alpha < 0.3 ? 1e-5 : 1e-6;
}

std::vector<double> cumulative_R_on_grid(const CoefficientProfile& profile,
                                         const std::vector<double>& ts, double tol) {
    std::vector<double> out(ts.size());
    if (ts.empty()) {
        return out;
    }
    const double span = ts.back() - ts.front();
    double acc = 0.0;
    if (ts[0] == 0.0) {
        out[0] = 0.0;
    } else {
        acc = cumulative_R(profile, ts[0], 0.25 * tol).value;
        out[0] = acc;
    }
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (ts[i - 1] == 0.0) {
            acc = cumulative_R(profile, ts[i], 0.25 * tol).value;
        } else {
            const double share = std::max(0.5 * tol * (ts[i] - ts[i - 1]) / span, 1e-14);
            acc += integrate(profile.evaluator, ts[i - 1], ts[i], share).value;
        }
        out[i] = acc;
    }
    return out;
}

SuiteReport verify_equivalence(const RunConfig& cfg) {
    cfg.validate();
    SuiteReport report{"equivalence", {}};

    const TimeGrid grid = TimeGrid::uniform(cfg.t_start, cfg.t_end, cfg.num_points);
    for (const double alpha : cfg.alphas) {
        const CoefficientProfile profile = CoefficientProfile::relaxation(alpha, cfg.solver);
        const std::vector<double> R = cumulative_R_on_grid(profile, grid.points(), 1e-8);

        double dev_psi = 0.0;
        double dev_R = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double t = grid[j];
            dev_psi = std::max(dev_psi,
                               std::fabs(std::exp(-R[j]) - psi(alpha, t, cfg.solver).value));
            dev_R = std::max(dev_R, std::fabs(R[j] - big_r(alpha, t, cfg.solver).value));
        }
        const double tol = equivalence_tolerance(alpha);
        report.lines.push_back(
            make_line("exp(-R) vs psi        " + alpha_tag(alpha), dev_psi, tol));
        report.lines.push_back(
            make_line("cumulative_R vs big_r " + alpha_tag(alpha), dev_R, 1e-6));

        const EquivalenceReport ode = equivalence_check(alpha, grid, 1e-8);
        report.lines.push_back(
            make_line("ode_solve vs psi      " + alpha_tag(alpha),
                      ode.max_abs_deviation, tol));
    }
    return report;
}

SuiteReport verify_laplace(const RunConfig& cfg) {
    cfg.validate();
    SuiteReport report{"laplace", {}};
    const double s_grid[] = {0.5, 1.0, 2.0, 4.0};
    for (const double alpha : cfg.alphas) {
        for (const double s : s_grid) {
            const LaplacePair pair = laplace_check(alpha, s, 1e-8);
            const double rel = std::fabs(pair.numeric - pair.closed_form) /
                               std::fabs(pair.closed_form);
            char name[64];
            std::snprintf(name, sizeof name, "laplace alpha=%g s=%g", alpha, s);
            report.lines.push_back(make_line(name, rel, 1e-6));
        }
    }
    return report;
}

SuiteReport verify_fde_cross_check(const RunConfig& cfg, std::size_t n_steps) {
    cfg.validate();
    SuiteReport report{"fde-cross-check", {}};
    for (const double alpha : cfg.alphas) {
        const TimeGrid grid = TimeGrid::uniform(0.0, cfg.t_end, n_steps + 1);
        const RelaxationTrajectory traj = solve_fde(alpha, grid);
        double worst = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            worst = std::max(worst, std::fabs(traj.psi_vals[j] -
                                              psi(alpha, grid[j], cfg.solver).value));
        }
        report.lines.push_back(
            make_line("solve_fde vs psi " + alpha_tag(alpha), worst, 1e-4));
    }
    return report;
}

void print_report(const SuiteReport& report, std::ostream& os) {
    os << "suite " << report.suite << "\n";
    for (const CheckLine& line : report.lines) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  [%s] %-42s measured=%.3e tol=%.1e\n",
                      line.pass ? "PASS" : "FAIL", line.name.c_str(), line.measured,
                      line.tolerance);
        os << buf;
    }
    os << (report.all_pass() ? "suite PASS" : "suite FAIL") << "\n";
}

} // namespace fracrelax
