#include "sl2heat/distance.hpp"
#include "sl2heat/errors.hpp"
#include "sl2heat/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sl2heat {

namespace {

constexpr double kAxisZ = 1e-9; // r below this: cut-locus closed form
constexpr double kAxisR = 1e-9; // |z| below this: d = r

// State of the critical-point equation at a trial point, parametrized by
// m = theta_max - |theta| (distance to the admissible boundary), which keeps
// full relative precision when the root hugs the boundary at small r.
struct EquationPoint {
    double G;       // cosh r sin(theta) arch_ratio(u) at theta = -(theta_max - m)
    double Gp;      // dG/dtheta
    double u;       // cosh r cos(theta)
    double ar;      // arch_ratio(u)
};

struct EquationGeometry {
    double r;
    double cosh_r;
    double coshm1_r;
    double theta_max;  // arccos(-1/cosh r)
    double eta0;       // pi - theta_max, computed without cancellation
};

EquationGeometry make_geometry(double r) {
    EquationGeometry g;
    g.r = r;
    g.cosh_r = std::cosh(r);
    g.coshm1_r = cosh_m1(r);
    // 1 + (-1/cosh r) = coshm1(r)/cosh r;  arccos(-1+v) = pi - 2 asin(sqrt(v/2))
    const double v0 = g.coshm1_r / g.cosh_r;
    g.eta0 = 2.0 * std::asin(std::sqrt(0.5 * v0));
    g.theta_max = M_PI - g.eta0;
    return g;
}

EquationPoint eval_equation(const EquationGeometry& g, double m) {
    const double eta = g.eta0 + m; // pi - |theta|
    const double ce = std::cos(eta), se = std::sin(eta);
    const double cos_theta = -ce;
    const double sin_theta = -se; // theta in (-pi, 0)

    // 1 + u = 2 sin^2(eta/2) - (cosh r - 1) cos(eta): exact to relative
    // precision both near the boundary (eta small) and away from it.
    const double sh = std::sin(0.5 * eta);
    const double v = 2.0 * sh * sh - g.coshm1_r * ce;

    EquationPoint p;
    p.u = g.cosh_r * cos_theta;
    if (v <= 0.0) {
        p.G = -std::numeric_limits<double>::infinity();
        p.Gp = std::numeric_limits<double>::infinity();
        p.ar = std::numeric_limits<double>::infinity();
        return p;
    }
    double ar, arp;
    if (v < 0.5) {
        // u = -1 + v: arccos(u) = pi - 2 asin(sqrt(v/2)), sqrt(1-u^2) = sqrt(v(2-v))
        const double root = std::sqrt(v * (2.0 - v));
        ar = (M_PI - 2.0 * std::asin(std::sqrt(0.5 * v))) / root;
        arp = (1.0 - p.u * ar) / (v * (v - 2.0));
    } else {
        ar = arch_ratio(p.u);
        arp = arch_ratio_deriv(p.u);
    }
    p.ar = ar;
    p.G = g.cosh_r * sin_theta * ar;
    p.Gp = p.u * ar - g.cosh_r * g.cosh_r * sin_theta * sin_theta * arp;
    return p;
}

struct SolveResult {
    ThetaSolution sol;
    double u = 0.0;
    double ar = 0.0;
};

// Root of G(theta) - theta = -w for w = |z| > 0; root has theta < 0.
SolveResult solve_abs(double r, double w) {
    const EquationGeometry g = make_geometry(r);
    auto F = [&](double m, EquationPoint& p) {
        p = eval_equation(g, m);
        return p.G + (g.theta_max - m) + w;
    };

    EquationPoint p{};
    double m_hi = g.theta_max; // theta = 0: F = w > 0
    double m_lo = 0.5 * g.theta_max;
    int iters = 0;
    while (F(m_lo, p) > 0.0) {
        m_lo *= 0.5;
        if (++iters > 2000 || m_lo < 1e-300)
            throw ConvergenceFailure("solve_theta: could not bracket the root");
    }

    double m = 0.5 * (m_lo + m_hi);
    double f = F(m, p);
    double best_m = m, best_f = std::fabs(f);
    for (int it = 0; it < 200; ++it) {
        if (f > 0.0)
            m_hi = m;
        else
            m_lo = m;
        double m_next;
        const double fp = p.Gp - 1.0; // dF/dm
        if (std::isfinite(fp) && fp > 0.0) {
            m_next = m - f / fp;
            if (!(m_next > m_lo && m_next < m_hi)) m_next = 0.5 * (m_lo + m_hi);
        } else {
            m_next = 0.5 * (m_lo + m_hi);
        }
        if (m_next == m) break;
        m = m_next;
        f = F(m, p);
        ++iters;
        if (std::fabs(f) < best_f) {
            best_f = std::fabs(f);
            best_m = m;
        }
        if (best_f == 0.0) break;
    }
    if (std::fabs(f) > best_f) {
        m = best_m;
        f = F(m, p);
    }

    if (!(std::fabs(f) < 1e-10))
        throw ConvergenceFailure("solve_theta: residual above 1e-10");

    SolveResult out;
    out.sol.theta = -(g.theta_max - m);
    out.sol.residual = std::fabs(f);
    out.sol.iterations = iters;
    out.sol.bracket = {-(g.theta_max - m_lo), -(g.theta_max - m_hi)};
    out.u = p.u;
    out.ar = p.ar;
    return out;
}

} // namespace

const char* to_string(DistanceCase c) {
    switch (c) {
        case DistanceCase::axis_z: return "axis_z";
        case DistanceCase::axis_r: return "axis_r";
        default: return "generic";
    }
}

ThetaSolution solve_theta(double r, double z) {
    if (!(r > 0.0)) throw DomainError("solve_theta: r must be > 0");
    if (std::fabs(z) > M_PI + 1e-12) throw DomainError("solve_theta: |z| must not exceed pi");
    if (z == 0.0) return ThetaSolution{};

    SolveResult s = solve_abs(r, std::fabs(z));
    if (z < 0.0) {
        s.sol.theta = -s.sol.theta;
        s.sol.bracket = {-s.sol.bracket.first, -s.sol.bracket.second};
    }
    return s.sol;
}

DistanceValue distance_squared(double r, double z) {
    if (!(r >= 0.0)) throw DomainError("distance_squared: r must be >= 0");
    if (std::fabs(z) > M_PI + 1e-12)
        throw DomainError("distance_squared: |z| must not exceed pi");

    if (std::fabs(z) < kAxisR) return {r * r, DistanceCase::axis_r};
    if (r < kAxisZ) return {2.0 * M_PI * std::fabs(z) + z * z, DistanceCase::axis_z};

    const SolveResult s = solve_abs(r, std::fabs(z));
    const double sh = std::sinh(r);
    const double d = sh * s.ar;
    return {d * d, DistanceCase::generic};
}

DistanceValue distance_squared(const GroupElement& g1, const GroupElement& g2) {
    const CylCoord c = matrix_to_cyl(g1.inverse() * g2);
    return distance_squared(c.r, c.z);
}

DistanceBounds distance_bounds_check(const std::vector<std::pair<double, double>>& grid) {
    DistanceBounds b{std::numeric_limits<double>::infinity(), 0.0};
    for (const auto& [r, z] : grid) {
        const double denom = r * r + std::fabs(z);
        if (denom <= 0.0) continue;
        const double ratio = distance_squared(r, z).d2 / denom;
        b.c_fit = std::min(b.c_fit, ratio);
        b.C_fit = std::max(b.C_fit, ratio);
    }
    if (!std::isfinite(b.c_fit) || !(b.C_fit > 0.0))
        throw DomainError("distance_bounds_check: empty or degenerate grid");
    return b;
}

} // namespace sl2heat
