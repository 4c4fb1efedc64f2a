#pragma once

#include <functional>

namespace sl2heat {

/// Element of the group of real 2x2 matrices with unit determinant.
struct GroupElement {
    double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;

    double det() const { return a11 * a22 - a12 * a21; }
    GroupElement inverse() const { return {a22, -a12, -a21, a11}; }
    GroupElement operator*(const GroupElement& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    /// Scale so that det = 1 exactly (up to roundoff).
    GroupElement renormalized() const;
    bool unimodular(double tol = 1e-10) const;
};

/// Cylindric coordinates (r, theta, z):
///   g = exp(r cos(theta) X + r sin(theta) Y) exp(z Z),
/// with r >= 0, theta in [0, 2pi), z in [-pi, pi].
struct CylCoord {
    double r = 0.0;
    double theta = 0.0;
    double z = 0.0;

    /// Reduce theta mod 2pi and check the ranges; throws DomainError.
    CylCoord normalized() const;
};

/// Smooth function of (r, z) with optional analytic partial derivatives.
/// Missing derivatives fall back to central differences with step
/// h = max(1e-5, 1e-5*|coordinate|).
struct RadialFunction {
    std::function<double(double, double)> value;
    std::function<double(double, double)> dr{}, dz{}, drr{}, drz{}, dzz{};

    bool analytic_derivatives() const { return dr && dz && drr && drz && dzz; }

    double eval(double r, double z) const { return value(r, z); }
    double eval_dr(double r, double z) const;
    double eval_dz(double r, double z) const;
    double eval_drr(double r, double z) const;
    double eval_drz(double r, double z) const;
    double eval_dzz(double r, double z) const;
};

/// Smooth function of the full coordinates (r, theta, z), same fallback.
struct ScalarField {
    std::function<double(double, double, double)> value;
    std::function<double(double, double, double)> dr{}, dtheta{}, dz{};

    double eval_dr(double r, double theta, double z) const;
    double eval_dtheta(double r, double theta, double z) const;
    double eval_dz(double r, double theta, double z) const;
};

struct FieldDerivatives {
    double Xf = 0.0, Yf = 0.0, Zf = 0.0;
};

/// Coefficients of the sublaplacian L = X^2 + Y^2 in cylindric coordinates:
///   L = d2r + 2 coth(2r) dr + tanh^2(r) d2z + 4/sinh^2(2r) d2theta
///       + 2 (1 - tanh^2 r) dz_dtheta.
/// The mixed-term factor 2(1-tanh^2 r) comes from expanding X^2 + Y^2
/// directly and is validated against nested field application in the tests.
struct SublaplacianCoeffs {
    double d2r = 1.0;
    double dr = 0.0;
    double d2z = 0.0;
    double d2theta = 0.0;
    double dz_dtheta = 0.0;
};

SublaplacianCoeffs sublaplacian_coeffs(double r);

/// Default radial cutoff below which 1/sinh-type coefficients are treated
/// as singular.
inline constexpr double kAxisCutoff = 1e-8;

/// exp(r cos(theta) X + r sin(theta) Y) exp(z Z) as an explicit matrix.
GroupElement cyl_to_matrix(const CylCoord& c);

/// Inverse coordinate map; theta = 0 at r = 0 where the angle degenerates.
/// Throws NonCylindric when det != 1 beyond tolerance.
CylCoord matrix_to_cyl(const GroupElement& g);

/// Left-invariant frame applied to f at c:
///   X = cos(theta+2z) dr - sin(theta+2z) (tanh r dz + (coth r - tanh r) dtheta)
///   Y = sin(theta+2z) dr + cos(theta+2z) (tanh r dz + (coth r - tanh r) dtheta)
///   Z = dz
/// Throws SingularAtAxis for r below `cutoff`.
FieldDerivatives apply_vector_fields(const ScalarField& f, const CylCoord& c,
                                     double cutoff = kAxisCutoff);

/// Carre du champ of a radial function:
///   Gamma(f,f) = (df/dr)^2 + tanh^2(r) (df/dz)^2.
double gamma_radial(const RadialFunction& f, double r, double z);

/// Iterated carre du champ of a radial function, in sum-of-squares form:
///   Gamma2(f,f) = (f_rr)^2 + (2/sinh(2r) f_r - tanh^2 r f_zz)^2
///                 + 2 (f_z/cosh^2 r + tanh r f_rz)^2  >= 0.
/// Throws SingularAtAxis when r < cutoff unless f_r vanishes at least
/// linearly there.
double gamma2_radial(const RadialFunction& f, double r, double z,
                     double cutoff = kAxisCutoff);

/// Sublaplacian restricted to radial functions:
///   L f = f_rr + 2 coth(2r) f_r + tanh^2(r) f_zz.
double sublaplacian_radial(const RadialFunction& f, double r, double z,
                           double cutoff = kAxisCutoff);

} // namespace sl2heat
