#pragma once

#include <cstdint>

#include "hybridop/params.hpp"

namespace hybridop {

/// log (a)_k, the rising factorial a(a+1)...(a+k-1).
double log_pochhammer(double a, long k);

/// log p_{n,k}(x); -inf when the weight vanishes.
double log_baskakov_weight(const OperatorParams& params, long k, double x);

/// p_{n,k}(x) = (n/c)_k (cx)^k / (k! (cx+1)^{n/c+k}).
double baskakov_weight(const OperatorParams& params, long k, double x);

/// log theta_{n,k}(t); -inf when the density vanishes.
double log_erlang_density(double n, long k, double t);

/// theta_{n,k}(t) = n e^{-nt} (nt)^k / k!, the Gamma(k+1, rate n) density.
double erlang_density(double n, long k, double t);

/// d/dx p_{n,k}(x) via the shifted-parameter identity
/// d/dx p_{n,k}(x) = n (p_{n+c,k-1}(x) - p_{n+c,k}(x)).
double baskakov_weight_derivative(const OperatorParams& params, long k, double x);

/// Index window [k_lo, k_hi] capturing at least 1 - tolerance of the weight mass.
struct TruncationWindow {
    long k_lo;
    long k_hi;
    double captured_mass;
    double tolerance;
};

/// Scans outward from the mode index floor(n x) until the captured weight mass
/// reaches 1 - tolerance. Throws std::runtime_error past hard_cap.
TruncationWindow truncation_window(const OperatorParams& params, double x, double tolerance,
                                   long hard_cap = 10'000'000);

}  // namespace hybridop
