#pragma once

namespace sl2heat {

/// cosh(x) - 1 without cancellation for small |x|.
double cosh_m1(double x);

/// log(cosh(x)), overflow-safe for large |x|.
double log_cosh(double x);

/// arccosh(1 + w) for w >= 0, accurate for tiny w.
double arccosh_1p(double w);

/// x / sinh(x), extended by 1 at x = 0; overflow-safe for large x.
double ratio_sinh(double x);

/// log(sinh(x)) for x > 0, overflow-safe.
double log_sinh(double x);

/// arccosh(x)/sqrt(x^2-1) for x > 1 and its real-analytic continuation
/// arccos(x)/sqrt(1-x^2) on (-1,1); value 1 at x = 1.  The function is the
/// derivative ratio of the squared hyperbolic radius and extends
/// holomorphically across x = 1; only the cut (-inf,-1] is excluded.
/// Throws DomainError for x <= -1.
double arch_ratio(double x);

/// d/dx arch_ratio(x) = (1 - x*arch_ratio(x)) / (x^2 - 1), with the same
/// continuation; equals -1/3 at x = 1.
double arch_ratio_deriv(double x);

/// x*coth(x) - 1, accurate near 0 (series x^2/3 - x^4/45 + ...).
double x_coth_x_m1(double x);

} // namespace sl2heat
