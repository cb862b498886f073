#pragma once

namespace fracrelax {

/// Which evaluation route produced a value.
enum class Regime { Series, Asymptotic, Contour, ClosedForm };

/// Non-fatal quality flags carried alongside a value.
enum class EvalWarning {
    None,
    SeriesNotConverged, // max_terms hit before the truncation criterion
    NonDecreasingTerms, // asymptotic terms stopped decreasing before the cap
    QuadratureSuspect,  // node doubling moved the result more than claimed
};

/// Index pair of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
    double alpha = 1.0; // in (0, 1]
    double beta = 1.0;  // > 0; 1 for the one-parameter function
    void validate() const; // throws std::invalid_argument
};

/// Tunables for series/asymptotic/contour evaluation.
struct SolverConfig {
    double series_tol = 1e-16;     // relative truncation tolerance
    double crossover_radius = 5.0; // |z| where the series hands off
    int max_terms = 500;
    int asymptotic_terms = 10; // cap on the (divergent) tail expansion
    int contour_nodes = 64;
    void validate() const;
};

struct EvalResult {
    double value = 0.0;
    double err_estimate = 0.0; // claimed upper bound on absolute error
    Regime regime = Regime::Series;
    EvalWarning warning = EvalWarning::None;
};

/// Taylor series sum_{n>=0} z^n / Gamma(alpha n + beta), compensated
/// summation, relative truncation. Accepts any z <= 0; for large |z| the
/// cancellation makes the result useless and err_estimate says so.
EvalResult ml_series(const MLParams& params, double z, const SolverConfig& cfg = {});

/// Tail expansion -sum_{k=1..K} z^{-k} / Gamma(beta - alpha k) for z -> -inf,
/// optimally truncated and capped at cfg.asymptotic_terms. Terms whose Gamma
/// argument is a pole contribute exactly zero. Requires alpha < 1, z < 0.
EvalResult ml_asymptotic(const MLParams& params, double z, const SolverConfig& cfg = {});

/// Reference route: Laplace inversion of s^{alpha-beta}/(s^alpha - z) over a
/// parabolic contour by the trapezoidal rule. Error decays geometrically in
/// `nodes` until the rounding floor (~1e-13). Oracle-grade; not used by
/// ml_eval. Requires z < 0, nodes >= 16.
EvalResult ml_contour(const MLParams& params, double z, int nodes);

/// E_{alpha,beta}(z) on z <= 0: closed-form exponential at alpha = beta = 1,
/// series while cancellation is harmless, asymptotic expansion when it can
/// certify the target accuracy, and a real-line spectral integral for the
/// band in between.
EvalResult ml_eval(const MLParams& params, double z, const SolverConfig& cfg = {});

namespace detail {

/// |z| up to which double-precision series summation keeps the absolute
/// rounding error near 1e-11 (the alternating sum is conditioned like
/// exp(|z|^{1/alpha})).
double series_cancellation_limit(double alpha);

/// Spectral representation of E_{alpha,beta}(z) for z < 0, 0 < alpha < 1:
/// an integral of a positive exponentially-damped kernel over [0, inf),
/// evaluated adaptively. Handles beta > 1 by index reduction.
EvalResult ml_spectral_integral(const MLParams& params, double z, double abs_tol);

} // namespace detail

} // namespace fracrelax
