#pragma once

#include <functional>
#include <vector>

namespace sl2heat {

/// Tolerances and budget for the adaptive quadrature used by the kernel
/// evaluations.  max_halfwidth, when positive, overrides the automatic
/// truncation of the infinite integration range.
struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double max_halfwidth = 0.0; // 0 = automatic
    int max_levels = 20;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double err = 0.0;
    int levels_used = 0;
    long n_evals = 0;
    bool converged = true;
};

/// One Gauss7/Kronrod15 panel on [a,b]: returns the K15 value, err is the
/// |K15-G7| discrepancy.
QuadResult gauss_kronrod_15(const std::function<double(double)>& f, double a, double b);

/// Adaptive Gauss-Kronrod on [a,b].  The interval starts split into
/// `initial_panels` equal panels (oscillation control); the worst panel is
/// bisected until the summed error estimate meets
/// max(abs_tol, rel_tol*|value|) or a panel reaches max_levels bisections.
/// Throws QuadratureNoConvergence only if `throw_on_failure`.
QuadResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              const QuadSpec& spec, int initial_panels = 1,
                              bool throw_on_failure = true);

/// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration on
/// the Legendre recurrence and cached per order.
const std::vector<double>& gauss_legendre_nodes(int n);
const std::vector<double>& gauss_legendre_weights(int n);

/// Composite fixed-order Gauss-Legendre over the panels defined by `edges`
/// (ascending).  Used for smooth 2-D sweeps where adaptivity is not needed.
double composite_gauss(const std::function<double(double)>& f,
                       const std::vector<double>& edges, int order);

/// Tensor-product composite Gauss-Legendre over a rectangle grid.
double tensor_gauss_2d(const std::function<double(double, double)>& f,
                       const std::vector<double>& x_edges,
                       const std::vector<double>& y_edges, int order);

/// Geometrically graded panel edges from 0 to `limit` with finest panel
/// `scale` (edges 0, scale, 2*scale, 4*scale, ... limit).
std::vector<double> graded_edges(double scale, double limit);

/// Symmetric version of graded_edges over [-limit, limit].
std::vector<double> graded_edges_symmetric(double scale, double limit);

} // namespace sl2heat
