#pragma once

#include <functional>

namespace fracrelax {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0; // accumulated panel estimates, absolute
    bool converged = true;     // false if some panel hit the depth limit
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod 7/15 on [a, b] to an absolute tolerance.
/// Panels are bisected until |K15 - G7| meets the local budget. Endpoints are
/// never evaluated, so integrable endpoint behaviour (after substitution)
/// passes through quietly.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth = 48);

} // namespace fracrelax
