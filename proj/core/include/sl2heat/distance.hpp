#pragma once

#include "sl2heat/group.hpp"

#include <utility>
#include <vector>

namespace sl2heat {

/// Root of the critical-point equation
///   theta - z = cosh(r) sin(theta) * arch_ratio(cosh(r) cos(theta)),
/// unique in (-arccos(-1/cosh r), arccos(-1/cosh r)).  theta and z carry
/// opposite signs; theta(r, 0) = 0.
struct ThetaSolution {
    double theta = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::pair<double, double> bracket{0.0, 0.0};
};

enum class DistanceCase { axis_z, axis_r, generic };

/// Squared Carnot-Caratheodory distance from the identity.
struct DistanceValue {
    double d2 = 0.0;
    DistanceCase case_tag = DistanceCase::generic;
};

const char* to_string(DistanceCase c);

/// Solve the critical-point equation for theta(r, z).  The right-hand side
/// is strictly increasing in theta with slope >= 1, so a bracketed Newton
/// iteration converges; throws ConvergenceFailure otherwise.
ThetaSolution solve_theta(double r, double z);

/// Squared distance with the case split
///   r ~ 0:  d^2 = 2 pi |z| + z^2
///   z ~ 0:  d^2 = r^2
///   else:   d^2 = (theta - z)^2 tanh^2(r) / sin^2(theta)
///               = sinh^2(r) * arch_ratio(cosh r cos theta)^2,
/// the two generic forms being identical through the theta equation (the
/// second one stays finite as theta -> 0 and is the one evaluated).
DistanceValue distance_squared(double r, double z);

/// Squared distance between two group elements via left invariance:
/// d(g1, g2) = d(identity, g1^{-1} g2).  Throws NonCylindric outside the
/// chart.
DistanceValue distance_squared(const GroupElement& g1, const GroupElement& g2);

/// Empirical extremes of d^2/(r^2 + |z|) over a grid; both finite and
/// positive on any grid inside r in (0,3], |z| <= pi.
struct DistanceBounds {
    double c_fit = 0.0;
    double C_fit = 0.0;
};
DistanceBounds distance_bounds_check(const std::vector<std::pair<double, double>>& grid);

} // namespace sl2heat
