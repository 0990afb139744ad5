#pragma once

#include <vector>

#include "hybridop/params.hpp"
#include "hybridop/polynomial.hpp"

namespace hybridop {

/// Moment of the operator at fixed numeric (n, c), as a polynomial in x.
struct MomentPolynomial {
    Polynomial poly;
    int order;     // raw index i or central index m
    bool central;
    OperatorParams params;
};

/// Raw moment M_{n,r}(x) from the direct MGF-derived formula, expanded into
/// powers of x. Internally evaluated in extended precision; the alternating
/// sum cancels heavily in binary64.
MomentPolynomial raw_moment_closed(const OperatorParams& params, int r);

/// mu_{n,0} ... mu_{n,m_max} built from the recurrence
/// mu_{m+1} = (1/n)( x(1+cx)[mu_m' + m mu_{m-1}] + (m+1) mu_m + m x mu_{m-1} ).
/// The recurrence is subtraction-free, so coefficients carry full relative
/// precision.
std::vector<MomentPolynomial> central_moment_recurrence(const OperatorParams& params, int m_max);

/// mu_{n,m}(x) = sum_j C(m,j) (-x)^{m-j} M_{n,j}(x), assembled in extended
/// precision.
MomentPolynomial central_from_raw(const OperatorParams& params, int m);

struct LambdaNorm {
    int s;
    double value;
};

/// lambda_n(c,s) = (n/c)_s c^s n^{-s} = prod_{i=0}^{s-1} (n + i c)/n.
LambdaNorm lambda_norm(const OperatorParams& params, int s);

/// Printed q_n(x,r) = sqrt( n x(cx+2) + r(x(cx+4)+3) + r^2 (x+1)^2 + 2 ).
double qn_reference(const OperatorParams& params, int r, double x);

/// Printed second central moment of the transformed operator, q_n(x,r)^2/n^2.
double transformed_second_moment_printed(const OperatorParams& params, int r, double x);

/// Numerically computed L_{n,c,r}((t-x)^2; x) through the operator series.
double transformed_second_central_moment(const OperatorParams& params, int r, double x,
                                         const EvalConfig& cfg = {});

/// Exact second central moment of the transformed operator under the n + rc
/// shift, from the Gamma and weight-family moments. Test oracle counterpart
/// of the quadrature route.
double transformed_second_moment_exact(const OperatorParams& params, int r, double x);

}  // namespace hybridop
