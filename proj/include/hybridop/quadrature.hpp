#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hybridop/function_spec.hpp"
#include "hybridop/params.hpp"

namespace hybridop {

struct QuadResult {
    double value;
    double error_estimate;
};

/// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::vector<double>& gauss_legendre_nodes(int order);
const std::vector<double>& gauss_legendre_weights(int order);

/// Adaptive composite Gauss-Legendre on [a, b]. Panels are pre-split at the
/// given breakpoints and then bisected until the whole-vs-halves difference
/// meets the tolerance share of each panel. Throws NonConvergent when the
/// accumulated estimate stays far above tolerance at max refinement depth.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadratureConfig& cfg,
                              std::span<const double> breakpoints = {});

/// Integral of theta_{n,k}(t) g(t) over [0, inf). Substitutes u = n t so the
/// weight becomes u^k e^{-u}/k!; integrates on a window around the Gamma(k+1)
/// mean (tilted by g's growth rate) and bounds the remaining tail by a
/// Chernoff estimate folded into error_estimate.
QuadResult erlang_integral(const FunctionSpec& g, double n, long k, const QuadratureConfig& cfg);

/// Exact Gamma-moment evaluation: integral of theta_{n,k}(t) p(t) with
/// p(t) = sum coeffs[j] t^j, using int theta t^j dt = (k+1)_j / n^j.
double polynomial_erlang_integral(std::span<const double> coeffs, double n, long k);

/// log of a certified upper bound for int_{u > U} u^k e^{-(1-beta)u}/k! du
/// (Chernoff on the tilted Gamma). Returns -inf when the bound is zero.
double log_gamma_upper_tail_bound(long k, double upper, double beta);

/// Same for the lower tail int_{0 <= u < L}.
double log_gamma_lower_tail_bound(long k, double lower, double beta);

}  // namespace hybridop
