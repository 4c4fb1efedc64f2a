#include "sl2heat/group.hpp"
#include "sl2heat/errors.hpp"
#include "sl2heat/special.hpp"

#include <algorithm>
#include <cmath>

namespace sl2heat {

namespace {

double fd_step(double x) { return std::max(1e-5, 1e-5 * std::fabs(x)); }

double wrap_two_pi(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

} // namespace

GroupElement GroupElement::renormalized() const {
    const double d = det();
    if (!(d > 0.0)) throw NonCylindric("renormalized: non-positive determinant");
    const double s = 1.0 / std::sqrt(d);
    return {a11 * s, a12 * s, a21 * s, a22 * s};
}

bool GroupElement::unimodular(double tol) const { return std::fabs(det() - 1.0) <= tol; }

CylCoord CylCoord::normalized() const {
    if (!(r >= 0.0)) throw DomainError("CylCoord: r must be >= 0");
    if (std::fabs(z) > M_PI + 1e-12) throw DomainError("CylCoord: z must lie in [-pi, pi]");
    return {r, wrap_two_pi(theta), std::clamp(z, -M_PI, M_PI)};
}

GroupElement cyl_to_matrix(const CylCoord& cin) {
    const CylCoord c = cin.normalized();
    const double ch = std::cosh(c.r), sh = std::sinh(c.r);
    const double cz = std::cos(c.z), sz = std::sin(c.z);
    const double ct = std::cos(c.theta + c.z), st = std::sin(c.theta + c.z);
    return {ch * cz + sh * ct, ch * sz + sh * st,
            -ch * sz + sh * st, ch * cz - sh * ct};
}

CylCoord matrix_to_cyl(const GroupElement& gin) {
    if (!gin.unimodular(1e-6))
        throw NonCylindric("matrix_to_cyl: determinant deviates from 1");
    const GroupElement g = gin.renormalized();

    const double tr = g.a11 + g.a22;        // 2 cosh r cos z
    const double skew = g.a12 - g.a21;      // 2 cosh r sin z
    const double diag = g.a11 - g.a22;      // 2 sinh r cos(theta+z)
    const double symm = g.a12 + g.a21;      // 2 sinh r sin(theta+z)

    if (tr * tr + skew * skew < 4.0 - 1e-9)
        throw NonCylindric("matrix_to_cyl: element outside the cylindric chart");

    const double sinh_r = 0.5 * std::hypot(diag, symm);
    const double r = std::asinh(sinh_r);
    const double z = std::atan2(skew, tr);
    double theta = 0.0;
    if (sinh_r > 0.0) theta = wrap_two_pi(std::atan2(symm, diag) - z);
    return {r, theta, z};
}

double RadialFunction::eval_dr(double r, double z) const {
    if (dr) return dr(r, z);
    const double h = fd_step(r);
    return (value(r + h, z) - value(r - h, z)) / (2.0 * h);
}

double RadialFunction::eval_dz(double r, double z) const {
    if (dz) return dz(r, z);
    const double h = fd_step(z);
    return (value(r, z + h) - value(r, z - h)) / (2.0 * h);
}

double RadialFunction::eval_drr(double r, double z) const {
    if (drr) return drr(r, z);
    const double h = fd_step(r);
    return (value(r + h, z) - 2.0 * value(r, z) + value(r - h, z)) / (h * h);
}

double RadialFunction::eval_drz(double r, double z) const {
    if (drz) return drz(r, z);
    const double hr = fd_step(r), hz = fd_step(z);
    return (value(r + hr, z + hz) - value(r + hr, z - hz) - value(r - hr, z + hz) +
            value(r - hr, z - hz)) /
           (4.0 * hr * hz);
}

double RadialFunction::eval_dzz(double r, double z) const {
    if (dzz) return dzz(r, z);
    const double h = fd_step(z);
    return (value(r, z + h) - 2.0 * value(r, z) + value(r, z - h)) / (h * h);
}

double ScalarField::eval_dr(double r, double theta, double z) const {
    if (dr) return dr(r, theta, z);
    const double h = fd_step(r);
    return (value(r + h, theta, z) - value(r - h, theta, z)) / (2.0 * h);
}

double ScalarField::eval_dtheta(double r, double theta, double z) const {
    if (dtheta) return dtheta(r, theta, z);
    const double h = fd_step(theta);
    return (value(r, theta + h, z) - value(r, theta - h, z)) / (2.0 * h);
}

double ScalarField::eval_dz(double r, double theta, double z) const {
    if (dz) return dz(r, theta, z);
    const double h = fd_step(z);
    return (value(r, theta, z + h) - value(r, theta, z - h)) / (2.0 * h);
}

SublaplacianCoeffs sublaplacian_coeffs(double r) {
    if (!(r > 0.0)) throw SingularAtAxis("sublaplacian_coeffs: r must be > 0");
    const double T = std::tanh(r);
    const double s2 = std::sinh(2.0 * r);
    SublaplacianCoeffs c;
    c.d2r = 1.0;
    c.dr = 2.0 / std::tanh(2.0 * r);
    c.d2z = T * T;
    c.d2theta = 4.0 / (s2 * s2);
    c.dz_dtheta = 2.0 * (1.0 - T * T);
    return c;
}

FieldDerivatives apply_vector_fields(const ScalarField& f, const CylCoord& cin, double cutoff) {
    const CylCoord c = cin.normalized();
    if (c.r < cutoff)
        throw SingularAtAxis("apply_vector_fields: r below the axis cutoff");

    const double a = c.theta + 2.0 * c.z;
    const double ca = std::cos(a), sa = std::sin(a);
    const double T = std::tanh(c.r);
    const double K = 1.0 / std::tanh(c.r) - T;

    const double fr = f.eval_dr(c.r, c.theta, c.z);
    const double ft = f.eval_dtheta(c.r, c.theta, c.z);
    const double fz = f.eval_dz(c.r, c.theta, c.z);

    FieldDerivatives out;
    out.Xf = ca * fr - sa * (T * fz + K * ft);
    out.Yf = sa * fr + ca * (T * fz + K * ft);
    out.Zf = fz;
    return out;
}

double gamma_radial(const RadialFunction& f, double r, double z) {
    if (!(r >= 0.0)) throw DomainError("gamma_radial: r must be >= 0");
    const double fr = f.eval_dr(r, z);
    const double fz = f.eval_dz(r, z);
    const double T = std::tanh(r);
    return fr * fr + T * T * fz * fz;
}

namespace {

// 1/sinh-type coefficients need f_r = O(r) near the axis to stay finite.
void check_axis(double r, double fr, double cutoff, const char* who) {
    if (r >= cutoff) return;
    if (std::fabs(fr) > 1e3 * std::max(r, 1e-300))
        throw SingularAtAxis(std::string(who) + ": r below cutoff with non-vanishing df/dr");
}

} // namespace

double gamma2_radial(const RadialFunction& f, double r, double z, double cutoff) {
    if (!(r > 0.0)) throw SingularAtAxis("gamma2_radial: r must be > 0");
    const double fr = f.eval_dr(r, z);
    check_axis(r, fr, cutoff, "gamma2_radial");

    const double fz = f.eval_dz(r, z);
    const double frr = f.eval_drr(r, z);
    const double frz = f.eval_drz(r, z);
    const double fzz = f.eval_dzz(r, z);

    const double T = std::tanh(r);
    const double ch = std::cosh(r);
    const double t1 = frr;
    const double t2 = (2.0 / std::sinh(2.0 * r)) * fr - T * T * fzz;
    const double t3 = fz / (ch * ch) + T * frz;
    return t1 * t1 + t2 * t2 + 2.0 * t3 * t3;
}

double sublaplacian_radial(const RadialFunction& f, double r, double z, double cutoff) {
    if (!(r > 0.0)) throw SingularAtAxis("sublaplacian_radial: r must be > 0");
    const double fr = f.eval_dr(r, z);
    check_axis(r, fr, cutoff, "sublaplacian_radial");

    const double frr = f.eval_drr(r, z);
    const double fzz = f.eval_dzz(r, z);
    const double T = std::tanh(r);
    return frr + (2.0 / std::tanh(2.0 * r)) * fr + T * T * fzz;
}

} // namespace sl2heat
