#pragma once

#include <utility>
#include <vector>

#include "hybridop/function_spec.hpp"
#include "hybridop/moments.hpp"
#include "hybridop/params.hpp"
#include "hybridop/report.hpp"
#include "hybridop/smoothing.hpp"

namespace hybridop {

/// The two first-order coefficient variants of the asymptotic expansion:
/// the printed (c x + s + 1) and the proof-internal (1 + s(1 + c x)).
/// They coincide at s = 1 and at x = 0.
struct VoronovskajaRHS {
    int s;
    static double coefficient_first_printed(int s, double c, double x) { return c * x + s + 1; }
    static double coefficient_first_proof(int s, double c, double x) {
        return 1.0 + s * (1.0 + c * x);
    }
    static double coefficient_second(double c, double x) { return x * (2.0 + c * x) / 2.0; }
};

/// Least-squares slope of log(error) vs log(n); pairs with error at or below
/// the noise floor are excluded. Throws InsufficientData when fewer than two
/// usable pairs remain.
double fit_order(const std::vector<std::pair<double, double>>& pairs,
                 double noise_floor = 1e-12);

/// Richardson limit 2 g(2n) - g(n) from the last doubling pair of a sweep,
/// assuming g(n) = L + a/n.
double richardson_limit(const std::vector<std::pair<double, double>>& g_values);

/// Convergence of (1/lambda_n) d^s/dx^s L_{n,c} f toward f^{(s)} over an
/// n-sweep and x-grid.
ExperimentReport simultaneous_convergence_experiment(const FunctionSpec& f, int s,
                                                     const std::vector<double>& x_grid,
                                                     const std::vector<double>& n_sweep, double c,
                                                     const EvalConfig& cfg = {});

/// g(n) = n((1/lambda_n) d^s L f - f^{(s)}) extrapolated to its limit and
/// adjudicated against both first-coefficient variants.
ExperimentReport voronovskaja_experiment(const FunctionSpec& f, int s, double x, double c,
                                         const std::vector<double>& n_sweep,
                                         const EvalConfig& cfg = {});

/// Special-cased s = 0 report, including the c -> 1 reduction comparison.
ExperimentReport voronovskaja_s0_remark(const FunctionSpec& f, double x, double c,
                                        const std::vector<double>& n_sweep,
                                        const EvalConfig& cfg = {});

/// Pointwise bound |d^r L f - f^{(r)}| <= 2 omega(f^{(r)}, q_n/n) on an
/// (n, x) grid, with q_n taken both from the printed formula and from the
/// numerically computed second central moment; the verdict uses the numeric
/// variant.
ExperimentReport pointwise_bound_check(const FunctionSpec& f, int r,
                                       const std::vector<double>& n_list,
                                       const std::vector<double>& x_list, double c,
                                       const EvalConfig& cfg = {});

/// Sup-norm error of d^r L f on [a1, b1] per n, with fitted decay order and
/// the bounded-ratio check against n^{-1}||f|| + omega_2(f^{(r)}, n^{-1/2}).
ExperimentReport global_rate_experiment(const FunctionSpec& f, int r,
                                        const IntervalPair& intervals, double c,
                                        const std::vector<double>& n_sweep,
                                        const EvalConfig& cfg = {});

/// Decay of the off-diagonal mass sum_k p_{n,k}(x) int_{|t-x|>=delta} theta e^{gamma t}
/// along an n-sweep, with fitted log-log slope.
ExperimentReport tail_decay_experiment(double x, double delta, double gamma,
                                       const std::vector<double>& n_sweep, double c,
                                       const EvalConfig& cfg = {});

}  // namespace hybridop
