#include "sl2heat/special.hpp"
#include "sl2heat/errors.hpp"

#include <cmath>

namespace sl2heat {

double cosh_m1(double x) {
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s;
}

double log_cosh(double x) {
    const double a = std::fabs(x);
    if (a > 18.0) return a - M_LN2 + std::log1p(std::exp(-2.0 * a));
    return std::log(std::cosh(a));
}

double arccosh_1p(double w) {
    if (w < 0.0) return 0.0;
    return std::log1p(w + std::sqrt(w * (w + 2.0)));
}

double ratio_sinh(double x) {
    const double a = std::fabs(x);
    if (a < 1e-4) {
        const double a2 = a * a;
        return 1.0 - a2 / 6.0 + 7.0 * a2 * a2 / 360.0;
    }
    if (a > 350.0) {
        // x/sinh x = 2x e^{-x} / (1 - e^{-2x}); underflows gracefully to 0.
        return 2.0 * a * std::exp(-a) / (1.0 - std::exp(-2.0 * a));
    }
    return a / std::sinh(a);
}

double log_sinh(double x) {
    if (x > 18.0) return x - M_LN2 + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x));
}

double arch_ratio(double x) {
    if (x <= -1.0) throw DomainError("arch_ratio: argument <= -1 is outside the cut domain");
    const double u = x - 1.0;
    if (std::fabs(u) < 1e-4) {
        // arccosh(1+u)/sqrt((1+u)^2-1) = 1 - u/3 + 2u^2/15 - 2u^3/35 + O(u^4)
        return 1.0 + u * (-1.0 / 3.0 + u * (2.0 / 15.0 - u * 2.0 / 35.0));
    }
    if (x > 1.0) return std::acosh(x) / std::sqrt(x * x - 1.0);
    return std::acos(x) / std::sqrt(1.0 - x * x);
}

double arch_ratio_deriv(double x) {
    if (x <= -1.0) throw DomainError("arch_ratio_deriv: argument <= -1 is outside the cut domain");
    const double u = x - 1.0;
    if (std::fabs(u) < 1e-4) {
        return -1.0 / 3.0 + u * (4.0 / 15.0 - u * 6.0 / 35.0);
    }
    return (1.0 - x * arch_ratio(x)) / (x * x - 1.0);
}

double x_coth_x_m1(double x) {
    const double a = std::fabs(x);
    if (a < 1e-3) {
        const double a2 = a * a;
        return a2 / 3.0 - a2 * a2 / 45.0 + 2.0 * a2 * a2 * a2 / 945.0;
    }
    return a / std::tanh(a) - 1.0;
}

} // namespace sl2heat
