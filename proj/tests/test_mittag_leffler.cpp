#include <doctest.h>

#include <array>
#include <cmath>
#include <future>
#include <random>

#include "fracrelax/gamma.hpp"
#include "fracrelax/mittag_leffler.hpp"

using namespace fracrelax;

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// E_{1/2}(-x) = e^{x^2} erfc(x); the standard erfc routine is the oracle.
double ml_half_oracle(double x) { return std::exp(x * x) * std::erfc(x); }

// E_{1/2,1/2}(-x) = 1/sqrt(pi) - x e^{x^2} erfc(x)
double ml_half_half_oracle(double x) { return 1.0 / kSqrtPi - x * ml_half_oracle(x); }

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ml_eval({0.0, 1.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml_eval({1.2, 1.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml_eval({0.5, 0.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ml_eval({0.5, 1.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ml_asymptotic({1.0, 1.0}, -10.0), std::domain_error);
    CHECK_THROWS_AS(ml_contour({0.5, 1.0}, -1.0, 8), std::invalid_argument);
    SolverConfig bad;
    bad.max_terms = 1;
    CHECK_THROWS_AS(ml_series({0.5, 1.0}, -1.0, bad), std::invalid_argument);
}

TEST_CASE("series at classical points") {
    const EvalResult e1 = ml_series({1.0, 1.0}, -1.0);
    CHECK(e1.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(e1.warning == EvalWarning::None);
    CHECK(std::fabs(e1.value - std::exp(-1.0)) <= e1.err_estimate);

    // z = 0 leaves only the n = 0 term, 1/Gamma(beta)
    for (const double beta : {0.3, 1.0, 2.2, 4.7}) {
        const EvalResult r = ml_series({0.6, beta}, 0.0);
        CHECK(r.value == doctest::Approx(reciprocal_gamma(beta)).epsilon(1e-15));
    }

    const EvalResult h = ml_series({0.5, 1.0}, -1.0);
    CHECK(h.value == doctest::Approx(ml_half_oracle(1.0)).epsilon(1e-13));
    CHECK(h.value == doctest::Approx(0.427583576155807).epsilon(1e-12));
}

TEST_CASE("series reports non-convergence instead of lying") {
    SolverConfig tight;
    tight.max_terms = 5;
    const EvalResult r = ml_series({0.5, 1.0}, -3.0, tight);
    CHECK(r.warning == EvalWarning::SeriesNotConverged);
    CHECK(r.err_estimate > 1e-6);
}

TEST_CASE("series error estimate stays honest under cancellation") {
    // moderately hard: the sum is O(0.1) while terms reach O(e^9)
    const EvalResult r = ml_series({0.5, 1.0}, -9.0);
    const double truth = ml_half_oracle(3.0);
    CHECK(std::fabs(r.value - truth) <= r.err_estimate);
}

TEST_CASE("asymptotic expansion against the erfc oracle") {
    const EvalResult r = ml_asymptotic({0.5, 1.0}, -10.0);
    const double truth = ml_half_oracle(10.0); // e^{100} erfc(10)
    CHECK(truth == doctest::Approx(0.05614099274382259).epsilon(1e-10));
    CHECK(std::fabs(r.value - truth) < 1e-9);
    CHECK(std::fabs(r.value - truth) <= r.err_estimate);
    CHECK(r.regime == Regime::Asymptotic);
}

TEST_CASE("asymptotic single-term evaluation") {
    SolverConfig one;
    one.asymptotic_terms = 1;
    const EvalResult r = ml_asymptotic({0.25, 1.0}, -10.0, one);
    // leading term |z|^{-1} / Gamma(1 - alpha)
    CHECK(r.value == doctest::Approx(0.1 / gamma_real(0.75)).epsilon(1e-14));
    CHECK(r.value == doctest::Approx(0.0816048).epsilon(1e-5));
    // and the Gamma-pole term k = 2 contributes exactly zero at alpha = 0.5
    SolverConfig two;
    two.asymptotic_terms = 2;
    const EvalResult r2 = ml_asymptotic({0.5, 1.0}, -10.0, two);
    CHECK(r2.value == doctest::Approx(0.1 / gamma_real(0.5)).epsilon(1e-14));
}

TEST_CASE("asymptotic leading term matches the algebraic tail") {
    // for t = |z|^{1/alpha} large, E_alpha(-t^alpha) ~ t^{-alpha}/Gamma(1-alpha)
    const double alpha = 0.5;
    const double z = -1.0e4;
    const EvalResult r = ml_asymptotic({alpha, 1.0}, z);
    const double t = std::pow(-z, 1.0 / alpha);
    CHECK(r.value ==
          doctest::Approx(std::pow(t, -alpha) / gamma_real(1.0 - alpha)).epsilon(1e-4));
}

TEST_CASE("contour route at reference points") {
    const EvalResult e1 = ml_contour({1.0, 1.0}, -1.0, 32);
    CHECK(std::fabs(e1.value - std::exp(-1.0)) < 1e-12);
    CHECK(e1.warning == EvalWarning::None);

    const EvalResult h = ml_contour({0.5, 1.0}, -1.0, 32);
    CHECK(std::fabs(h.value - ml_half_oracle(1.0)) < 1e-10);

    const EvalResult hh = ml_contour({0.5, 0.5}, -1.0, 32);
    CHECK(std::fabs(hh.value - ml_half_half_oracle(1.0)) < 1e-10);
    CHECK(hh.value == doctest::Approx(0.136606007).epsilon(1e-7));
}

TEST_CASE("contour stays accurate across node counts") {
    for (const int nodes : {16, 24, 48, 96}) {
        const EvalResult r = ml_contour({0.5, 1.0}, -4.0, nodes);
        const double truth = ml_half_oracle(4.0);
        CHECK(std::fabs(r.value - truth) < 1e-12);
        CHECK(std::fabs(r.value - truth) <= r.err_estimate);
        CHECK(r.warning == EvalWarning::None);
    }
}

TEST_CASE("spectral integral covers the series/asymptotic gap") {
    // values where neither the series (cancellation) nor a 10-term tail
    // expansion reaches 1e-8 in doubles
    struct Probe {
        double alpha, z;
    };
    const Probe probes[] = {{0.10, -2.0}, {0.25, -3.0}, {0.30, -4.5},
                            {0.50, -6.0}, {0.75, -9.0}, {0.95, -15.0}};
    for (const Probe& p : probes) {
        const EvalResult s = detail::ml_spectral_integral({p.alpha, 1.0}, p.z, 1e-11);
        const EvalResult c = ml_contour({p.alpha, 1.0}, p.z, 64);
        CHECK(std::fabs(s.value - c.value) <= s.err_estimate + c.err_estimate);
        CHECK(std::fabs(s.value - c.value) < 1e-9);
    }
    // direct oracle checks on the half line
    const EvalResult s1 = detail::ml_spectral_integral({0.5, 1.0}, -1.0, 1e-11);
    CHECK(std::fabs(s1.value - ml_half_oracle(1.0)) < 1e-10);
    const EvalResult s2 = detail::ml_spectral_integral({0.5, 0.5}, -3.0, 1e-11);
    CHECK(std::fabs(s2.value - ml_half_half_oracle(3.0)) < 1e-10);
}

TEST_CASE("spectral integral reduces beta > 1") {
    // E_{1,2}(z) = (e^z - 1)/z gives an exact target for the reduction path
    const EvalResult r = detail::ml_spectral_integral({0.8, 2.1}, -4.0, 1e-12);
    const EvalResult c = ml_contour({0.8, 2.1}, -4.0, 64);
    CHECK(std::fabs(r.value - c.value) < 1e-9);
}

TEST_CASE("ml_eval dispatch and continuity") {
    const EvalResult c = ml_eval({1.0, 1.0}, -3.0);
    CHECK(c.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-15));
    CHECK(c.regime == Regime::ClosedForm);
    CHECK(c.value == doctest::Approx(0.049787068367864).epsilon(1e-12));

    const EvalResult h = ml_eval({0.5, 1.0}, -1.0);
    CHECK(h.value == doctest::Approx(0.427583576155807).epsilon(1e-12));
    CHECK(h.regime == Regime::Series);

    // continuity across each dispatch boundary, checked against the oracle
    SolverConfig cfg;
    for (const double alpha : {0.25, 0.5, 0.75, 0.9}) {
        const double cross = cfg.crossover_radius;
        const double below = ml_eval({alpha, 1.0}, -cross * 0.995).value;
        const double above = ml_eval({alpha, 1.0}, -cross * 1.005).value;
        const EvalResult cb = ml_contour({alpha, 1.0}, -cross * 0.995, 64);
        const EvalResult ca = ml_contour({alpha, 1.0}, -cross * 1.005, 64);
        CHECK(std::fabs(below - cb.value) < 1e-9);
        CHECK(std::fabs(above - ca.value) < 1e-9);
    }
}

TEST_CASE("ml_eval vs contour: pointwise agreement with honest errors") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> da(0.1, 0.95);
    std::uniform_real_distribution<double> dz(-50.0, 0.0);
    for (int i = 0; i < 60; ++i) {
        const double alpha = da(rng);
        const double z = dz(rng);
        if (z == 0.0) continue;
        const EvalResult e = ml_eval({alpha, 1.0}, z);
        const EvalResult c = ml_contour({alpha, 1.0}, z, 64);
        CAPTURE(alpha);
        CAPTURE(z);
        CHECK(std::fabs(e.value - c.value) <= e.err_estimate + c.err_estimate);
        CHECK(std::fabs(e.value - c.value) < 1e-8);
    }
    // the second index used by the derivative path gets the same treatment
    for (int i = 0; i < 30; ++i) {
        const double alpha = da(rng);
        const double z = dz(rng);
        if (z == 0.0) continue;
        const EvalResult e = ml_eval({alpha, alpha}, z);
        const EvalResult c = ml_contour({alpha, alpha}, z, 64);
        CAPTURE(alpha);
        CAPTURE(z);
        CHECK(std::fabs(e.value - c.value) <= e.err_estimate + c.err_estimate);
        CHECK(std::fabs(e.value - c.value) < 1e-8);
    }
}

TEST_CASE("small-index corner: the kernel cliff steepens but stays resolvable") {
    // at alpha = 0.01 the spectral kernel decays like exp(-r^100); the
    // adaptive panels have to find that cliff on their own
    for (const double z : {-0.5, -1.5, -6.0, -50.0}) {
        const EvalResult e = ml_eval({0.01, 1.0}, z);
        const EvalResult c = ml_contour({0.01, 1.0}, z, 64);
        CAPTURE(z);
        CHECK(std::fabs(e.value - c.value) <= e.err_estimate + c.err_estimate);
        CHECK(std::fabs(e.value - c.value) < 1e-8);
    }
}

TEST_CASE("evaluators are pure: concurrent sweeps match serial results") {
    const auto sweep = [](int lane) {
        double acc = 0.0;
        for (int i = 0; i < 40; ++i) {
            const double alpha = 0.2 + 0.15 * (i % 5);
            const double z = -0.4 * (i + 1) - 0.01 * lane;
            acc += ml_eval({alpha, 1.0}, z).value;
        }
        return acc;
    };
    std::array<double, 4> serial{};
    for (int lane = 0; lane < 4; ++lane) serial[lane] = sweep(lane);

    std::array<std::future<double>, 4> lanes;
    for (int lane = 0; lane < 4; ++lane) {
        lanes[lane] = std::async(std::launch::async, sweep, lane);
    }
    for (int lane = 0; lane < 4; ++lane) {
        CHECK(lanes[lane].get() == serial[lane]);
    }
}

TEST_CASE("complete monotonicity on the negative axis") {
    // E_alpha(-x) is positive and decreasing in x for 0 < alpha <= 1
    for (const double alpha : {0.25, 0.5, 0.75, 1.0}) {
        double prev = 1.0;
        for (double x = 0.25; x < 40.0; x *= 1.7) {
            const double v = ml_eval({alpha, 1.0}, -x).value;
            CAPTURE(alpha);
            CAPTURE(x);
            CHECK(v > 0.0);
            CHECK(v < prev);
            prev = v;
        }
    }
}
