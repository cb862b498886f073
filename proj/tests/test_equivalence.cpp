#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fracrelax/equivalence.hpp"
#include "fracrelax/relaxation.hpp"

using namespace fracrelax;

namespace {
double psi_half_oracle(double t) { return std::exp(t) * std::erfc(std::sqrt(t)); }
} // namespace

TEST_CASE("cumulative_R of simple rates") {
    const CoefficientProfile unit = CoefficientProfile::constant(1.0);
    CHECK(cumulative_R(unit, 3.0, 1e-10).value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cumulative_R(unit, 0.0, 1e-10).value == 0.0);

    // r built from the alpha = 1 relaxation coefficient is identically 1
    const CoefficientProfile r1 = CoefficientProfile::relaxation(1.0);
    for (const double t : {0.4, 2.0, 5.0}) {
        CHECK(cumulative_R(r1, t, 1e-10).value == doctest::Approx(t).epsilon(1e-10));
    }
}

TEST_CASE("cumulative_R reproduces the closed-form decay exponent") {
    const CoefficientProfile r_half = CoefficientProfile::relaxation(0.5);
    const QuadResult q = cumulative_R(r_half, 1.0, 1e-9);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(-std::log(psi_half_oracle(1.0))).epsilon(1e-8));
    CHECK(q.value == doctest::Approx(0.8496055).epsilon(1e-6));
    // against big_r across alpha and t, including the singular-head region
    for (const double alpha : {0.25, 0.5, 0.75}) {
        const CoefficientProfile p = CoefficientProfile::relaxation(alpha);
        for (const double t : {0.01, 0.6, 2.5, 5.0}) {
            CAPTURE(alpha);
            CAPTURE(t);
            CHECK(cumulative_R(p, t, 1e-9).value ==
                  doctest::Approx(big_r(alpha, t).value).epsilon(1e-7));
        }
    }
}

TEST_CASE("cumulative_R is strictly increasing") {
    const CoefficientProfile p = CoefficientProfile::relaxation(0.25);
    double prev = -1.0;
    for (double t = 0.05; t <= 6.0; t += 0.41) {
        const double v = cumulative_R(p, t, 1e-9).value;
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("ode_solve with a constant rate is exponential decay") {
    const TimeGrid grid = TimeGrid::uniform(0.0, 5.0, 65);
    const RelaxationTrajectory traj =
        ode_solve(CoefficientProfile::constant(1.0), grid, 1.0);
    CHECK(traj.provenance == Provenance::OdeEquivalent);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(traj.psi_vals[i] == doctest::Approx(std::exp(-grid[i])).epsilon(1e-10));
    }
}

TEST_CASE("ode_solve shows fourth-order behaviour on a smooth rate") {
    // r(t) = 1/(1+t) integrates to log(1+t); with local control disabled the
    // per-interval rule is a single Simpson panel
    CoefficientProfile p;
    p.evaluator = [](double t) { return 1.0 / (1.0 + t); };
    p.small_t_exponent = 0.0;
    p.small_t_constant = 1.0;

    const auto max_err = [&](std::size_t n) {
        const TimeGrid grid = TimeGrid::uniform(0.0, 5.0, n);
        const RelaxationTrajectory traj = ode_solve(p, grid, 1.0, 1e6);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst = std::max(worst,
                             std::fabs(traj.psi_vals[i] - 1.0 / (1.0 + grid[i])));
        }
        return worst;
    };
    const double e1 = max_err(33);
    const double e2 = max_err(65);
    CHECK(e1 / e2 > 10.0); // observed order ~4
    CHECK(e1 / e2 < 26.0);
}

TEST_CASE("ode_solve restart continues along the same curve") {
    const double alpha = 0.5;
    const TimeGrid grid = TimeGrid::uniform(0.1, 5.0, 257);
    const RelaxationTrajectory traj = ode_solve(CoefficientProfile::relaxation(alpha),
                                                grid, psi(alpha, 0.1).value);
    for (std::size_t i = 0; i < grid.size(); i += 32) {
        CHECK(traj.psi_vals[i] ==
              doctest::Approx(psi_half_oracle(grid[i])).epsilon(2e-6));
    }
}

TEST_CASE("equivalence of the two relaxation descriptions") {
    SUBCASE("alpha = 1 is exact to quadrature noise") {
        const TimeGrid grid = TimeGrid::uniform(0.0, 5.0, 257);
        const EquivalenceReport rep = equivalence_check(1.0, grid, 1e-8);
        CHECK(rep.max_abs_deviation < 1e-10);
        CHECK(rep.routes_compared.first == Provenance::OdeEquivalent);
    }
    SUBCASE("alpha = 0.5") {
        const TimeGrid grid = TimeGrid::uniform(0.0, 5.0, 1025);
        const EquivalenceReport rep = equivalence_check(0.5, grid, 1e-8);
        CHECK(rep.max_abs_deviation < 1e-6);
        CHECK(rep.per_point_deviation.size() == grid.size());
        double worst = 0.0;
        for (const double d : rep.per_point_deviation) worst = std::max(worst, d);
        CHECK(worst == rep.max_abs_deviation);
    }
    SUBCASE("alpha = 0.25 with refinement") {
        const EquivalenceReport coarse =
            equivalence_check(0.25, TimeGrid::uniform(0.0, 5.0, 1025), 1e-8);
        CHECK(coarse.max_abs_deviation < 1e-5);
        const EquivalenceReport fine =
            equivalence_check(0.25, TimeGrid::uniform(0.0, 5.0, 2049), 1e-8);
        CHECK(fine.max_abs_deviation <= coarse.max_abs_deviation * 1.02 + 1e-9);
    }
}

TEST_CASE("laplace transform identity") {
    SUBCASE("classical point") {
        const LaplacePair p = laplace_check(1.0, 1.0, 1e-9);
        CHECK(p.closed_form == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(p.numeric == doctest::Approx(0.5).epsilon(1e-8));
    }
    SUBCASE("half order arithmetic identities") {
        const LaplacePair a = laplace_check(0.5, 4.0, 1e-9);
        CHECK(a.closed_form == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
        CHECK(std::fabs(a.numeric - a.closed_form) / a.closed_form < 1e-6);
        const LaplacePair b = laplace_check(0.5, 1.0, 1e-9);
        CHECK(b.closed_form == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(std::fabs(b.numeric - b.closed_form) / b.closed_form < 1e-6);
    }
    SUBCASE("spot checks across alpha and s") {
        for (const double alpha : {0.25, 0.75}) {
            for (const double s : {0.5, 2.0}) {
                const LaplacePair p = laplace_check(alpha, s, 1e-9);
                CAPTURE(alpha);
                CAPTURE(s);
                CHECK(std::fabs(p.numeric - p.closed_form) / p.closed_form < 1e-6);
            }
        }
    }
}

TEST_CASE("profile validation") {
    CoefficientProfile bad;
    CHECK_THROWS_AS(cumulative_R(bad, 1.0, 1e-8), std::invalid_argument);
    bad.evaluator = [](double) { return 1.0; };
    bad.small_t_exponent = -1.5;
    CHECK_THROWS_AS(cumulative_R(bad, 1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientProfile::constant(-1.0), std::invalid_argument);
}
