#pragma once

#include <stdexcept>

namespace fracrelax {

/// Thrown when Gamma(x) itself is requested at a pole (x = 0, -1, -2, ...).
/// Distinct from std::invalid_argument so callers can tell a pole apart from
/// a malformed argument. The reciprocal view stays well defined there.
struct gamma_pole_error : std::domain_error {
    explicit gamma_pole_error(double x);
    double argument;
};

/// True iff x is a nonpositive integer (a pole of Gamma).
bool is_gamma_pole(double x) noexcept;

/// sin(pi*x) with argument reduction, exactly zero at integers.
double sin_pi(double x) noexcept;

/// Gamma(x) for real x. Overflows to +inf above x ~ 171.62, underflows to
/// signed zero for large negative non-integer x. Throws gamma_pole_error at
/// poles.
double gamma_real(double x);

/// 1/Gamma(x); exactly 0 at the poles of Gamma. Never throws: this is the
/// form series and asymptotic expansions need, where a pole in a denominator
/// means the term drops out.
double reciprocal_gamma(double x) noexcept;

/// Upper incomplete gamma Gamma(a, x) for x > 0. Continued fraction for
/// x > a + 1, series complement otherwise.
double upper_incomplete_gamma(double a, double x);

} // namespace fracrelax
