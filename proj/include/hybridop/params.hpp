#pragma once

#include <cmath>
#include <stdexcept>

namespace hybridop {

/// Parameter pair (n, c) of the operator L_{n,c}. Real n >= 1 is accepted;
/// c in (0, 1], with c = 1 the Baskakov-Szasz case.
struct OperatorParams {
    double n;
    double c;

    OperatorParams(double n_, double c_) : n(n_), c(c_) {
        if (!(n >= 1.0) || !std::isfinite(n))
            throw std::invalid_argument("OperatorParams: n must be a finite real >= 1");
        if (!(c > 0.0) || !(c <= 1.0))
            throw std::invalid_argument("OperatorParams: c must lie in (0, 1]");
        if (!std::isfinite(n / c))
            throw std::invalid_argument("OperatorParams: n/c must be finite");
    }

    /// Shape parameter n/c of the weight family.
    double shape() const { return n / c; }
};

struct QuadratureConfig {
    int base_order = 64;
    int max_refinements = 12;
    double rel_tolerance = 1e-10;
    double abs_tolerance = 1e-14;
};

struct EvalConfig {
    double truncation_tolerance = 1e-14;
    long hard_cap = 10'000'000;  // maximum series index before giving up
    QuadratureConfig quad{};
};

}  // namespace hybridop
