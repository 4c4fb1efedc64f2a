#pragma once

#include "sl2heat/quadrature.hpp"

#include <functional>

namespace sl2heat {

/// One heat-kernel evaluation: density value with respect to the invariant
/// measure sinh(2r)/2 dr dtheta dz, together with the quadrature error
/// estimate.  log_value is the stably computed logarithm (usable even when
/// value underflows).
struct KernelValue {
    double value = 0.0;
    double err_estimate = 0.0;
    double t = 0.0;
    double r = 0.0;
    double z = 0.0;
    double log_value = 0.0;
};

/// Heat kernel of the 3-D hyperbolic Laplacian in geodesic polar form:
///   s_t(cosh rho) = e^{-t}/(4 pi t)^{3/2} * (rho/sinh rho) * e^{-rho^2/(4t)}.
double s_kernel(double t, double rho);

/// Subelliptic heat kernel at (r, z) issued from the identity, through the
/// integral representation
///   p_t(r,z) = 1/2 * (4 pi t)^{-1/2} * Int_R e^{(y-iz)^2/(4t)}
///              s_t(cosh r cosh y) dy,
/// evaluated as a real cosine integral over y in [0, inf).  The imaginary
/// part cancels by the y -> -y symmetry.  For r below 1e-7 the evaluation
/// delegates to the closed form p_axis.
///
/// Note on normalization: this is the representation's own scale, fixed by
/// p_t(0,0) = e^{-t}/(64 t^2).  Its total mass against the invariant
/// measure is 1/2, not 1; see kernel_mu_mass().
KernelValue p_integral(double t, double r, double z, const QuadSpec& q = {});

/// Closed form on the axis r = 0, for |z| <= pi:
///   p_t(0,z) = e^{-t}/(16 t^2) * e^{-(2 pi |z| + z^2)/(4t)}
///              / (1 + e^{-pi |z|/(2t)})^2,
/// with the value e^{-t}/(64 t^2) at z = 0.
double p_axis(double t, double z);

/// log p_axis, stable for small t where the value underflows.
double p_axis_log(double t, double z);

/// Total mass of p_integral against mu = sinh(2r)/2 dr dtheta dz.  The
/// integral representation above carries the 3-D hyperbolic kernel whose
/// radial-measure mass is 1/(4 pi), which makes this constant exactly 1/2.
/// Consumers that need a probability density multiply by 1/kernel_mu_mass().
constexpr double kernel_mu_mass() { return 0.5; }

/// Heat semigroup of the elliptic operator
///   D2 = d2r + 2 coth(2r) dr + (1 - tanh^2 r) d2y
/// applied at the origin:
///   (1/2) Int_{r>0} Int_{y>0} s_t(cosh r cosh y) f(r,y) sinh(2r) dr dy.
/// f must be bounded with support inside [0,r_max] x [0,y_max].
double delta2_expectation(double t, const std::function<double(double, double)>& f,
                          double r_max, double y_max, const QuadSpec& q = {});

} // namespace sl2heat
