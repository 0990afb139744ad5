#include "hybridop/basis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hybridop {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

namespace {
// The log terms grow like (a + k) log(a + k); at the extreme parameter
// corners they reach ~1e5, so binary64 arithmetic alone leaves ~1e-11 of
// relative error in the exponentiated weight. Extended precision keeps the
// partition of unity tight to ~1e-14.
long double log_pochhammer_l(long double a, long k) {
    if (k == 0) return 0.0L;
    if (k < 30) {
        long double s = 0.0L;
        for (long i = 0; i < k; ++i) s += std::log(a + static_cast<long double>(i));
        return s;
    }
    return std::lgamma(a + static_cast<long double>(k)) - std::lgamma(a);
}
}  // namespace

double log_pochhammer(double a, long k) {
    if (a <= 0.0) throw std::invalid_argument("log_pochhammer: a must be positive");
    if (k < 0) throw std::invalid_argument("log_pochhammer: k must be nonnegative");
    return static_cast<double>(log_pochhammer_l(a, k));
}

double log_baskakov_weight(const OperatorParams& params, long k, double x) {
    if (x < 0.0) throw std::invalid_argument("log_baskakov_weight: x must be >= 0");
    if (k < 0) return kNegInf;
    const long double a = params.shape();
    if (x == 0.0) return k == 0 ? 0.0 : kNegInf;
    const long double cx = static_cast<long double>(params.c) * x;
    const long double lw = log_pochhammer_l(a, k) + static_cast<long double>(k) * std::log(cx) -
                           std::lgamma(static_cast<long double>(k) + 1.0L) -
                           (a + static_cast<long double>(k)) * std::log1p(cx);
    return static_cast<double>(lw);
}

double baskakov_weight(const OperatorParams& params, long k, double x) {
    const double lw = log_baskakov_weight(params, k, x);
    return lw == kNegInf ? 0.0 : std::exp(lw);
}

double log_erlang_density(double n, long k, double t) {
    if (t < 0.0) throw std::invalid_argument("log_erlang_density: t must be >= 0");
    if (t == 0.0) return k == 0 ? std::log(n) : kNegInf;
    return std::log(n) + static_cast<double>(k) * std::log(n * t) - n * t -
           std::lgamma(static_cast<double>(k) + 1.0);
}

double erlang_density(double n, long k, double t) {
    const double lw = log_erlang_density(n, k, t);
    return lw == kNegInf ? 0.0 : std::exp(lw);
}

double baskakov_weight_derivative(const OperatorParams& params, long k, double x) {
    if (x <= 0.0) throw std::invalid_argument("baskakov_weight_derivative: x must be > 0");
    // d/dx p_{n,k}(x) = n (p_{n+c,k-1}(x) - p_{n+c,k}(x)); p_{.,-1} = 0.
    const OperatorParams shifted(params.n + params.c, params.c);
    const double lower = k > 0 ? baskakov_weight(shifted, k - 1, x) : 0.0;
    return params.n * (lower - baskakov_weight(shifted, k, x));
}

TruncationWindow truncation_window(const OperatorParams& params, double x, double tolerance,
                                   long hard_cap) {
    if (!(tolerance > 0.0) || tolerance > 1e-3)
        throw std::invalid_argument("truncation_window: tolerance must lie in (0, 1e-3]");
    if (x < 0.0) throw std::invalid_argument("truncation_window: x must be >= 0");
    if (x == 0.0) return {0, 0, 1.0, tolerance};

    const long mode = static_cast<long>(std::floor(params.n * x));
    long lo = mode, hi = mode;
    double mass = baskakov_weight(params, mode, x);
    double frontier_lo = lo > 0 ? baskakov_weight(params, lo - 1, x) : 0.0;
    double frontier_hi = baskakov_weight(params, hi + 1, x);
    while (mass < 1.0 - tolerance) {
        if (hi - lo >= hard_cap)
            throw std::runtime_error("truncation_window: exceeded hard cap, parameters pathological");
        if (frontier_lo == 0.0 && frontier_hi == 0.0 && lo == 0) break;  // nothing left to add
        if (lo > 0 && frontier_lo >= frontier_hi) {
            mass += frontier_lo;
            --lo;
            frontier_lo = lo > 0 ? baskakov_weight(params, lo - 1, x) : 0.0;
        } else {
            mass += frontier_hi;
            ++hi;
            frontier_hi = baskakov_weight(params, hi + 1, x);
        }
    }
    return {lo, hi, mass, tolerance};
}

}  // namespace hybridop
