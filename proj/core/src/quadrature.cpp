#include "sl2heat/quadrature.hpp"
#include "sl2heat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace sl2heat {

void QuadSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("QuadSpec: tolerances must be positive");
    if (max_levels < 1 || max_levels > 40)
        throw DomainError("QuadSpec: max_levels must lie in [1,40]");
    if (max_halfwidth < 0.0)
        throw DomainError("QuadSpec: max_halfwidth must be >= 0");
}

namespace {

// Gauss7/Kronrod15 abscissae and weights (positive half).
constexpr double kK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss7 weights aligned with the odd-index K15 nodes (and the centre).
constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value, err;
    int level;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, int level) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double k15 = kK15Weights[7] * fc;
    double g7 = kG7Weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kK15Nodes[i];
        const double fs = f(mid + dx) + f(mid - dx);
        k15 += kK15Weights[i] * fs;
        if (i % 2 == 1) g7 += kG7Weights[i / 2] * fs;
    }
    k15 *= half;
    g7 *= half;
    return Panel{a, b, k15, std::fabs(k15 - g7), level};
}

} // namespace

QuadResult gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    Panel p = evaluate_panel(f, a, b, 0);
    return QuadResult{p.value, p.err, 0, 15, true};
}

QuadResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              const QuadSpec& spec, int initial_panels, bool throw_on_failure) {
    spec.validate();
    initial_panels = std::clamp(initial_panels, 1, 100000);

    std::priority_queue<Panel> queue;
    double total = 0.0, total_err = 0.0;
    long evals = 0;
    int max_level = 0;

    const double width = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        Panel p = evaluate_panel(f, a + i * width, a + (i + 1) * width, 0);
        total += p.value;
        total_err += p.err;
        evals += 15;
        queue.push(p);
    }

    auto tolerance = [&]() { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)); };

    while (total_err > tolerance()) {
        Panel worst = queue.top();
        if (worst.level >= spec.max_levels) break; // cannot refine further
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, worst.level + 1);
        Panel right = evaluate_panel(f, mid, worst.b, worst.level + 1);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        max_level = std::max(max_level, worst.level + 1);
        queue.push(left);
        queue.push(right);
    }

    QuadResult result{total, total_err, max_level, evals, total_err <= tolerance()};
    if (!result.converged && throw_on_failure)
        throw QuadratureNoConvergence("adaptive_integrate: error " + std::to_string(total_err) +
                                      " above tolerance after max_levels subdivisions");
    return result;
}

namespace {

void compute_gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n(x).
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

std::mutex g_gl_mutex;
std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_gl_cache;

const std::pair<std::vector<double>, std::vector<double>>& gl_rule(int n) {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find(n);
    if (it == g_gl_cache.end()) {
        std::pair<std::vector<double>, std::vector<double>> rule;
        compute_gauss_legendre(n, rule.first, rule.second);
        it = g_gl_cache.emplace(n, std::move(rule)).first;
    }
    return it->second;
}

} // namespace

const std::vector<double>& gauss_legendre_nodes(int n) { return gl_rule(n).first; }
const std::vector<double>& gauss_legendre_weights(int n) { return gl_rule(n).second; }

double composite_gauss(const std::function<double(double)>& f,
                       const std::vector<double>& edges, int order) {
    const auto& xs = gauss_legendre_nodes(order);
    const auto& ws = gauss_legendre_weights(order);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        double acc = 0.0;
        for (int i = 0; i < order; ++i) acc += ws[i] * f(mid + half * xs[i]);
        total += half * acc;
    }
    return total;
}

double tensor_gauss_2d(const std::function<double(double, double)>& f,
                       const std::vector<double>& x_edges,
                       const std::vector<double>& y_edges, int order) {
    return composite_gauss(
        [&](double x) {
            return composite_gauss([&](double y) { return f(x, y); }, y_edges, order);
        },
        x_edges, order);
}

std::vector<double> graded_edges(double scale, double limit) {
    std::vector<double> edges{0.0};
    double e = scale;
    while (e < limit) {
        edges.push_back(e);
        e *= 2.0;
    }
    edges.push_back(limit);
    return edges;
}

std::vector<double> graded_edges_symmetric(double scale, double limit) {
    std::vector<double> half = graded_edges(scale, limit);
    std::vector<double> edges;
    for (auto it = half.rbegin(); it != half.rend(); ++it) edges.push_back(-*it);
    for (std::size_t i = 1; i < half.size(); ++i) edges.push_back(half[i]);
    return edges;
}

} // namespace sl2heat
