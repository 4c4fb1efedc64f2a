#include "sl2heat/kernel.hpp"
#include "sl2heat/errors.hpp"
#include "sl2heat/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sl2heat {

namespace {

constexpr double kAxisDelegate = 1e-7;   // below this, use the closed form
constexpr double kDifferenceMode = 0.05; // below this, integrate p - p_axis

// rho(y) = arccosh(cosh r cosh y), overflow-safe, and delta = rho - y >= 0.
struct Rho {
    double rho;
    double delta;
};

Rho rho_of(double r, double y) {
    const double lr = log_cosh(r), ly = log_cosh(y);
    if (lr + ly > 300.0) {
        // arccosh(x) = ln(2x) - O(1/x^2); the correction is below 1e-260.
        const double rho = M_LN2 + lr + ly;
        return {rho, rho - y};
    }
    const double w = cosh_m1(r) * std::cosh(y) + cosh_m1(y);
    const double rho = arccosh_1p(w);
    return {rho, rho - y};
}

// Magnitude envelope of the shifted integrand exp((y^2-rho^2+r^2)/(4t)) *
// ratio_sinh(rho); the shift makes the value 1 * ratio_sinh(r) at y = 0.
double envelope(double t, double r, double y) {
    const Rho q = rho_of(r, y);
    const double expo = (r * r - q.delta * (q.rho + y)) / (4.0 * t);
    return std::exp(expo) * ratio_sinh(q.rho);
}

// Envelope without the r^2 shift, for the difference-mode integrand where
// both terms are O(ratio_sinh(y)).
double envelope_diff(double t, double r, double y) {
    const Rho q = rho_of(r, y);
    const double expo = (-q.delta * (q.rho + y)) / (4.0 * t);
    return std::exp(expo) * ratio_sinh(q.rho) + ratio_sinh(y);
}

double find_y_max(double t, double r, double z, double tol, bool diff_mode) {
    (void)z;
    tol = std::max(tol, 1e-300);
    auto env = [&](double y) {
        return diff_mode ? envelope_diff(t, r, y) : envelope(t, r, y);
    };
    double y = std::sqrt(std::max(4.0 * t * std::log(1.0 / tol), 1.0)) + r + 5.0;
    for (int i = 0; i < 200; ++i) {
        const double e0 = env(y);
        if (e0 <= 0.0) break;
        const double e1 = env(1.05 * y);
        if (e1 < e0) {
            const double rate = (std::log(e0) - std::log(std::max(e1, 1e-320))) / (0.05 * y);
            if (e0 < 0.01 * tol && e0 / std::max(rate, 1e-12) < 0.1 * tol) break;
        }
        y *= 1.3;
        if (y > 4000.0) break;
    }
    return 1.15 * y;
}

int initial_panel_count(double y_max, double z, double t) {
    const double oscillations = y_max * std::fabs(z) / (2.0 * M_PI * t);
    return static_cast<int>(std::ceil(oscillations)) + 8;
}

} // namespace

double s_kernel(double t, double rho) {
    if (!(t > 0.0)) throw DomainError("s_kernel: t must be > 0");
    if (!(rho >= 0.0)) throw DomainError("s_kernel: rho must be >= 0");
    const double pref = std::exp(-t) / std::pow(4.0 * M_PI * t, 1.5);
    return pref * ratio_sinh(rho) * std::exp(-rho * rho / (4.0 * t));
}

double p_axis(double t, double z) {
    return std::exp(p_axis_log(t, z));
}

double p_axis_log(double t, double z) {
    if (!(t > 0.0)) throw DomainError("p_axis: t must be > 0");
    z = std::fabs(z);
    if (z > M_PI + 1e-12) throw DomainError("p_axis: |z| must not exceed pi");
    z = std::min(z, M_PI);
    // log of e^{-t}/(16 t^2) * e^{-(2 pi z + z^2)/(4t)} / (1+e^{-pi z/(2t)})^2;
    // at z = 0 the last factor is 4, giving e^{-t}/(64 t^2).
    return -t - std::log(16.0 * t * t) - (2.0 * M_PI * z + z * z) / (4.0 * t) -
           2.0 * std::log1p(std::exp(-M_PI * z / (2.0 * t)));
}

KernelValue p_integral(double t, double r, double z, const QuadSpec& q) {
    if (!(t > 0.0)) throw DomainError("p_integral: t must be > 0");
    if (!(r >= 0.0)) throw DomainError("p_integral: r must be >= 0");
    if (std::fabs(z) > M_PI + 1e-12) throw DomainError("p_integral: |z| must not exceed pi");
    q.validate();

    KernelValue out;
    out.t = t;
    out.r = r;
    out.z = z;

    if (r < kAxisDelegate) {
        out.log_value = p_axis_log(t, z);
        out.value = std::exp(out.log_value);
        out.err_estimate = 0.0;
        return out;
    }

    const double freq = z / (2.0 * t);
    const bool diff_mode = r < kDifferenceMode;
    const double y_max =
        q.max_halfwidth > 0.0 ? q.max_halfwidth : find_y_max(t, r, z, q.abs_tol, diff_mode);
    const int panels = initial_panel_count(y_max, z, t);

    if (diff_mode) {
        // p = p_axis + correction; the correction integrand is O(r^2) relative
        // to the axis one, so the closed form carries the precision.
        auto f = [&](double y) {
            const Rho rq = rho_of(r, y);
            const double g_r =
                std::exp(-rq.delta * (rq.rho + y) / (4.0 * t)) * ratio_sinh(rq.rho);
            return (g_r - ratio_sinh(y)) * std::cos(y * freq);
        };
        const QuadResult quad = adaptive_integrate(f, 0.0, y_max, q, panels);
        const double pref =
            std::exp(-t) / std::pow(4.0 * M_PI * t, 2.0) * std::exp(-z * z / (4.0 * t));
        const double axis = p_axis(t, z);
        out.value = axis + pref * quad.value;
        out.err_estimate = pref * quad.err;
        out.log_value = p_axis_log(t, z) + std::log1p(pref * quad.value / axis);
        return out;
    }

    auto f = [&](double y) {
        const Rho rq = rho_of(r, y);
        const double expo = (r * r - rq.delta * (rq.rho + y)) / (4.0 * t);
        return std::exp(expo) * ratio_sinh(rq.rho) * std::cos(y * freq);
    };
    const QuadResult quad = adaptive_integrate(f, 0.0, y_max, q, panels);
    const double log_pref = -t - 2.0 * std::log(4.0 * M_PI * t) - (r * r + z * z) / (4.0 * t);
    const double pref = std::exp(log_pref);
    out.value = pref * quad.value;
    out.err_estimate = pref * quad.err;
    out.log_value =
        quad.value > 0.0 ? log_pref + std::log(quad.value) : -std::numeric_limits<double>::infinity();
    return out;
}

double delta2_expectation(double t, const std::function<double(double, double)>& f,
                          double r_max, double y_max, const QuadSpec& q) {
    if (!(t > 0.0)) throw DomainError("delta2_expectation: t must be > 0");
    if (!(r_max > 0.0) || !(y_max > 0.0))
        throw DomainError("delta2_expectation: support box must be positive");
    q.validate();

    // s_t concentrates at rho ~ sqrt(t); grade the panels accordingly.
    const double scale = std::min(std::sqrt(t), r_max / 4.0);
    const std::vector<double> r_edges = graded_edges(scale, r_max);
    const std::vector<double> y_edges = graded_edges(std::min(std::sqrt(t), y_max / 4.0), y_max);

    const double pref = std::exp(-t) / std::pow(4.0 * M_PI * t, 1.5);
    auto integrand = [&](double r, double y) {
        const Rho rq = rho_of(r, y);
        const double st =
            pref * ratio_sinh(rq.rho) * std::exp(-rq.rho * rq.rho / (4.0 * t));
        return st * f(r, y) * std::sinh(2.0 * r);
    };
    return 0.5 * tensor_gauss_2d(integrand, r_edges, y_edges, 20);
}

} // namespace sl2heat
