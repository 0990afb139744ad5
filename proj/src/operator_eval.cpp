#include "hybridop/operator_eval.hpp"

#include <cmath>
#include <string>

#include "hybridop/basis.hpp"
#include "hybridop/errors.hpp"
#include "hybridop/quadrature.hpp"

namespace hybridop {

namespace {

// Shared series core: sum_k p(basis_params, k, x) * int theta_{kernel_n, k+offset} f.
// The mass window is grown past k_hi while terms still matter relative to the
// running sum; integrands with exponential growth put weight well beyond the
// weight-mass window.
OperatorValue sum_series(const FunctionSpec& f, double x, const OperatorParams& basis_params,
                         double kernel_n, long k_offset, const EvalConfig& cfg) {
    if (f.growth_rate >= kernel_n)
        throw GrowthError("operator: growth rate " + std::to_string(f.growth_rate) +
                          " >= n = " + std::to_string(kernel_n));
    OperatorValue out{0.0, 0.0, 0.0};
    if (x == 0.0) {
        QuadResult q = erlang_integral(f, kernel_n, k_offset, cfg.quad);
        out.value = q.value;
        out.quadrature_error = q.error_estimate;
        out.truncation_mass_dropped = 0.0;
        return out;
    }
    const TruncationWindow window =
        truncation_window(basis_params, x, cfg.truncation_tolerance, cfg.hard_cap);
    double mass = 0.0;
    for (long k = window.k_lo; k <= window.k_hi; ++k) {
        const double w = baskakov_weight(basis_params, k, x);
        if (w == 0.0) continue;
        QuadResult q = erlang_integral(f, kernel_n, k + k_offset, cfg.quad);
        out.value += w * q.value;
        out.quadrature_error += w * q.error_estimate;
        mass += w;
    }
    // Extension phase above the window.
    int insignificant = 0;
    for (long k = window.k_hi + 1; insignificant < 10; ++k) {
        if (k > cfg.hard_cap)
            throw NonConvergent("operator: series extension exceeded hard cap");
        const double w = baskakov_weight(basis_params, k, x);
        const double scale = std::max(std::fabs(out.value), 1e-300);
        if (w == 0.0) break;
        QuadResult q = erlang_integral(f, kernel_n, k + k_offset, cfg.quad);
        const double term = w * q.value;
        out.value += term;
        out.quadrature_error += w * q.error_estimate;
        mass += w;
        if (std::fabs(term) < 1e-16 * scale)
            ++insignificant;
        else
            insignificant = 0;
    }
    out.truncation_mass_dropped = std::max(0.0, 1.0 - mass);
    return out;
}

}  // namespace

OperatorValue apply(const FunctionSpec& f, double x, const OperatorParams& params,
                    const EvalConfig& cfg) {
    return sum_series(f, x, params, params.n, 0, cfg);
}

OperatorValue apply_transformed(const FunctionSpec& f_r, int r, double x,
                                const OperatorParams& params, const EvalConfig& cfg) {
    if (r < 0 || r > 6)
        throw std::invalid_argument("apply_transformed: r must lie in [0, 6]");
    const OperatorParams basis(params.n + r * params.c, params.c);
    return sum_series(f_r, x, basis, params.n, r, cfg);
}

OperatorValue apply_transformed_unit_shift(const FunctionSpec& f_r, int r, double x,
                                           const OperatorParams& params, const EvalConfig& cfg) {
    if (r < 0 || r > 6)
        throw std::invalid_argument("apply_transformed_unit_shift: r must lie in [0, 6]");
    const OperatorParams basis(params.n + r, params.c);
    return sum_series(f_r, x, basis, params.n, r, cfg);
}

OperatorValue derivative_of_operator(const FunctionSpec& f, int r, double x,
                                     const OperatorParams& params, const EvalConfig& cfg) {
    if (r == 0) return apply(f, x, params, cfg);
    OperatorValue v = apply_transformed(f.derivative_spec(r), r, x, params, cfg);
    // Each differentiation past the first contributes a factor (n+ic)/n via
    // the weight identity, so d^r/dx^r L = lambda_n(c,r) * L_{n,c,r}(f^(r)).
    double lambda = 1.0;
    for (int i = 1; i < r; ++i) lambda *= (params.n + i * params.c) / params.n;
    v.value *= lambda;
    v.quadrature_error *= lambda;
    return v;
}

double operator_mgf(double theta, double x, const OperatorParams& params) {
    const double n = params.n;
    const double a = params.shape();
    if (!(theta < n) || !(theta * (1.0 + params.c * x) < n))
        throw PoleError("operator_mgf: need theta < n and theta (1+cx) < n");
    return std::exp(std::log(n) + (a - 1.0) * std::log(n - theta) -
                    a * std::log(n - theta * (1.0 + params.c * x)));
}

double tail_mass(const OperatorParams& params, double x, double delta, double gamma,
                 const EvalConfig& cfg) {
    if (!(x > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("tail_mass: x and delta must be positive");
    const double n = params.n;
    if (gamma >= n) throw GrowthError("tail_mass: gamma must be below n");
    const double upper_limit = x + delta + 30.0 / std::sqrt(n) + 20.0 * (1.0 + gamma) / n;

    const TruncationWindow window =
        truncation_window(params, x, cfg.truncation_tolerance, cfg.hard_cap);
    const double beta = gamma / n;
    double total = 0.0;
    for (long k = window.k_lo; k <= window.k_hi; ++k) {
        const double w = baskakov_weight(params, k, x);
        if (w == 0.0) continue;
        const double lgk = std::lgamma(static_cast<double>(k) + 1.0);
        auto integrand = [&](double t) {
            if (t <= 0.0) return k == 0 ? n * std::exp(gamma * t) : 0.0;
            return std::exp(std::log(n) + static_cast<double>(k) * std::log(n * t) - n * t +
                            gamma * t - lgk);
        };
        double part = 0.0;
        if (x - delta > 0.0) part += integrate_adaptive(integrand, 0.0, x - delta, cfg.quad).value;
        if (upper_limit > x + delta)
            part += integrate_adaptive(integrand, x + delta, upper_limit, cfg.quad).value;
        // Chernoff remainder past the upper limit, in u = n t units.
        part += std::exp(log_gamma_upper_tail_bound(k, n * upper_limit, beta));
        total += w * part;
    }
    return total;
}

}  // namespace hybridop
