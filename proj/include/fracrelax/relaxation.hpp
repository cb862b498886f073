#pragma once

#include "fracrelax/mittag_leffler.hpp"

namespace fracrelax {

/// Relaxation function psi(alpha, t) = E_alpha(-t^alpha) for 0 < alpha <= 1,
/// t >= 0. psi(alpha, 0) = 1 exactly; alpha = 1 gives exp(-t) exactly.
EvalResult psi(double alpha, double t, const SolverConfig& cfg = {});

/// Time derivative phi = d psi/dt = -t^{alpha-1} E_{alpha,alpha}(-t^alpha).
/// Diverges at t = 0 for alpha < 1 (domain error); at alpha = 1 it is
/// -exp(-t) including t = 0. Always negative.
EvalResult phi(double alpha, double t, const SolverConfig& cfg = {});

/// Varying relaxation coefficient r(t) = -phi/psi, the rate that makes the
/// first-order equation dpsi/dt = -r(t) psi reproduce psi. Positive for
/// t > 0; identically 1 at alpha = 1.
EvalResult relax_coeff(double alpha, double t, const SolverConfig& cfg = {});

/// Cumulative decay exponent R(t) = -log psi(t); zero at t = 0, strictly
/// increasing, equal to t at alpha = 1.
EvalResult big_r(double alpha, double t, const SolverConfig& cfg = {});

} // namespace fracrelax
