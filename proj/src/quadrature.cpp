#include "hybridop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "hybridop/errors.hpp"

namespace hybridop {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct GLTable {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Newton iteration on the Legendre polynomial, nodes on [-1, 1].
GLTable compute_gl(int order) {
    GLTable t;
    t.nodes.resize(order);
    t.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::fabs(z - z1) > 1e-15);
        t.nodes[i] = -z;
        t.nodes[order - 1 - i] = z;
        t.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        t.weights[order - 1 - i] = t.weights[i];
    }
    return t;
}

const GLTable& gl_table(int order) {
    static std::map<int, GLTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

double gl_panel(const std::function<double(double)>& f, double a, double b, const GLTable& t) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < t.nodes.size(); ++i) sum += t.weights[i] * f(mid + half * t.nodes[i]);
    return sum * half;
}

struct AdaptiveState {
    const std::function<double(double)>* f;
    const GLTable* table;
    double tol_per_width;  // absolute tolerance per unit width
    int max_depth;
    double value = 0.0;
    double err = 0.0;
    bool depth_exhausted = false;
};

void adapt(AdaptiveState& st, double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl_panel(*st.f, a, mid, *st.table);
    const double right = gl_panel(*st.f, mid, b, *st.table);
    const double diff = std::fabs(whole - (left + right));
    if (diff <= st.tol_per_width * (b - a) || depth >= st.max_depth) {
        st.value += left + right;
        st.err += diff;
        if (depth >= st.max_depth && diff > st.tol_per_width * (b - a)) st.depth_exhausted = true;
        return;
    }
    adapt(st, a, mid, left, depth + 1);
    adapt(st, mid, b, right, depth + 1);
}

}  // namespace

const std::vector<double>& gauss_legendre_nodes(int order) { return gl_table(order).nodes; }
const std::vector<double>& gauss_legendre_weights(int order) { return gl_table(order).weights; }

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadratureConfig& cfg, std::span<const double> breakpoints) {
    if (!(b > a)) return {0.0, 0.0};
    if (cfg.base_order < 8) throw std::invalid_argument("QuadratureConfig: base_order must be >= 8");
    const GLTable& table = gl_table(cfg.base_order);

    std::vector<double> edges{a};
    for (double bp : breakpoints)
        if (bp > a && bp < b) edges.push_back(bp);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    // First pass estimate fixes the scale for the relative tolerance.
    double rough = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) rough += gl_panel(f, edges[i], edges[i + 1], table);
    const double tol = std::max(cfg.abs_tolerance, cfg.rel_tolerance * std::fabs(rough));

    AdaptiveState st;
    st.f = &f;
    st.table = &table;
    st.tol_per_width = tol / (b - a);
    st.max_depth = cfg.max_refinements;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double whole = gl_panel(f, edges[i], edges[i + 1], table);
        adapt(st, edges[i], edges[i + 1], whole, 0);
    }

    const double final_tol = std::max(cfg.abs_tolerance, cfg.rel_tolerance * std::fabs(st.value));
    if (st.depth_exhausted && st.err > 100.0 * final_tol)
        throw NonConvergent("integrate_adaptive: tolerance unmet after max_refinements");
    return {st.value, st.err + std::fabs(st.value) * 4e-16};
}

double log_gamma_upper_tail_bound(long k, double upper, double beta) {
    // int_{u>U} u^k e^{-(1-beta)u}/k! du = (1-beta)^{-(k+1)} P(Gamma(k+1,1) > (1-beta)U)
    // with the Chernoff bound P(X > V) <= (V/alpha)^alpha e^{alpha-V}, V >= alpha.
    const double alpha = static_cast<double>(k) + 1.0;
    const double rate = 1.0 - beta;
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    const double v = rate * upper;
    const double norm = -alpha * std::log(rate);
    if (v <= alpha) return norm;  // trivial bound: total tilted mass
    return norm + alpha * std::log(v / alpha) + alpha - v;
}

double log_gamma_lower_tail_bound(long k, double lower, double beta) {
    const double alpha = static_cast<double>(k) + 1.0;
    const double rate = 1.0 - beta;
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    if (lower <= 0.0) return kNegInf;
    const double v = rate * lower;
    const double norm = -alpha * std::log(rate);
    if (v >= alpha) return norm;
    return norm + alpha * std::log(v / alpha) + alpha - v;
}

QuadResult erlang_integral(const FunctionSpec& g, double n, long k, const QuadratureConfig& cfg) {
    if (!(n > 0.0)) throw std::invalid_argument("erlang_integral: n must be positive");
    if (k < 0) throw std::invalid_argument("erlang_integral: k must be nonnegative");
    if (g.growth_rate >= n)
        throw GrowthError("erlang_integral: growth rate " + std::to_string(g.growth_rate) +
                          " >= n = " + std::to_string(n));
    const double beta = std::max(0.0, g.growth_rate) / n;
    const double alpha = static_cast<double>(k) + 1.0;
    const double lgk = std::lgamma(alpha);

    // Window around the (tilted) Gamma mean; the untilted window is kept as a
    // floor so generic integrands bounded by e^{gamma t} stay covered. The
    // edges are then pushed outward until the Chernoff bounds certify the
    // remainder below 1e-18 of unit scale (the nominal +-12 sd window leaves
    // e^{-13}-size tails at small k).
    const double mean0 = alpha, sd0 = std::sqrt(alpha);
    const double meanb = alpha / (1.0 - beta), sdb = std::sqrt(alpha) / (1.0 - beta);
    double lo = std::max(0.0, std::min(mean0 - 12.0 * sd0, meanb - 12.0 * sdb));
    double hi = std::max(mean0 + 12.0 * sd0, meanb + 12.0 * sdb);
    const double log_target = std::log(1e-18);
    while (log_gamma_upper_tail_bound(k, hi, beta) > log_target) hi *= 1.25;
    while (lo > 0.0 && log_gamma_lower_tail_bound(k, lo, beta) > log_target)
        lo = std::max(0.0, lo - 2.0 * sdb);

    auto integrand = [&](double u) {
        double lw;
        if (u <= 0.0)
            lw = (k == 0) ? 0.0 : kNegInf;
        else
            lw = static_cast<double>(k) * std::log(u) - u - lgk;
        // |weight * g| <= exp(lw + beta u) up to g's constant; nodes below
        // binary64 range cannot contribute, and evaluating g there may
        // overflow even though the product is negligible.
        if (lw + beta * u < -745.0) return 0.0;
        const double gv = g.evaluator(u / n);
        if (std::isfinite(gv)) {
            const double w = std::exp(lw);
            return w == 0.0 ? 0.0 : w * gv;
        }
        // g exceeded binary64 range: fold it through its growth envelope
        return std::exp(lw + beta * u);
    };

    std::vector<double> breakpoints;
    for (double t0 : g.kinks) {
        const double u0 = n * t0;
        if (u0 > lo && u0 < hi) breakpoints.push_back(u0);
    }

    QuadResult res = integrate_adaptive(integrand, lo, hi, cfg, breakpoints);
    double tail = std::exp(log_gamma_upper_tail_bound(k, hi, beta));
    if (lo > 0.0) tail += std::exp(log_gamma_lower_tail_bound(k, lo, beta));
    res.error_estimate += tail;
    // rounding floor: the log-space weight carries an absolute exponent error
    // of order eps * (lgamma(k+1) + u), i.e. a relative error growing with k
    res.error_estimate += std::fabs(res.value) * 1e-15 * std::max(1.0, alpha);
    return res;
}

double polynomial_erlang_integral(std::span<const double> coeffs, double n, long k) {
    if (coeffs.size() > 31)
        throw std::invalid_argument("polynomial_erlang_integral: degree must be <= 30");
    double sum = 0.0;
    double factor = 1.0;  // (k+1)_j / n^j, built incrementally
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (j > 0) factor *= (static_cast<double>(k) + static_cast<double>(j)) / n;
        sum += coeffs[j] * factor;
    }
    return sum;
}

}  // namespace hybridop
