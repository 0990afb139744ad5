#pragma once

#include "hybridop/function_spec.hpp"
#include "hybridop/params.hpp"

namespace hybridop {

struct OperatorValue {
    double value;
    double truncation_mass_dropped;
    double quadrature_error;
};

/// L_{n,c} f(x) = sum_k p_{n,k}(x) int theta_{n,k}(t) f(t) dt.
OperatorValue apply(const FunctionSpec& f, double x, const OperatorParams& params,
                    const EvalConfig& cfg = {});

/// Transformed operator: sum_k p_{n+rc,k}(x) int theta_{n,k+r}(t) f_r(t) dt.
/// The x-basis shift is n -> n + r c (exact for the c-parameterized weights);
/// r = 0 reduces to apply.
OperatorValue apply_transformed(const FunctionSpec& f_r, int r, double x,
                                const OperatorParams& params, const EvalConfig& cfg = {});

/// Same series with the x-basis shift n -> n + r (the form printed for the
/// c = 1 case); kept for discrepancy reporting.
OperatorValue apply_transformed_unit_shift(const FunctionSpec& f_r, int r, double x,
                                           const OperatorParams& params,
                                           const EvalConfig& cfg = {});

/// (d^r/dx^r) L_{n,c}(f, x) via the derivative-transfer identity, i.e.
/// apply_transformed(f^{(r)}, r, x).
OperatorValue derivative_of_operator(const FunctionSpec& f, int r, double x,
                                     const OperatorParams& params, const EvalConfig& cfg = {});

/// Closed form L_{n,c}(e^{theta t}, x) = n (n-theta)^{n/c-1} / (n-theta(1+cx))^{n/c}.
double operator_mgf(double theta, double x, const OperatorParams& params);

/// sum_k p_{n,k}(x) int_{|t-x| >= delta} theta_{n,k}(t) e^{gamma t} dt.
double tail_mass(const OperatorParams& params, double x, double delta, double gamma,
                 const EvalConfig& cfg = {});

}  // namespace hybridop
