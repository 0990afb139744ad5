#pragma once

#include <functional>
#include <vector>

#include "hybridop/function_spec.hpp"
#include "hybridop/report.hpp"

namespace hybridop {

/// Outer interval [a, b] with inner interval [a1, b1] strictly inside (a, b).
struct IntervalPair {
    double a, b;
    double a1, b1;

    IntervalPair(double a_, double b_, double a1_, double b1_);
};

/// s-th forward difference Delta^s_h f(x) = sum_i (-1)^{s-i} C(s,i) f(x+ih).
double forward_difference(const std::function<double(double)>& f, int s, double h, double x);
double forward_difference(const FunctionSpec& f, int s, double h, double x);

/// Discretized omega_s(f, h, [a, b]): sup over 32 delta-levels in (0, h] and
/// a grid of x with [x, x+s delta] inside [a, b]. A lower bound to the true
/// modulus, converging under grid refinement.
double modulus_of_smoothness(const std::function<double(double)>& f, int s, double h, double a,
                             double b, int grid_points = 256);
double modulus_of_smoothness(const FunctionSpec& f, int s, double h, double a, double b,
                             int grid_points = 256);

/// Steklov mean f_{h,s} of order s in {1,2,3}, evaluable on [a1, b1] along
/// with its derivatives up to order s. The s-fold iterated integral is
/// collapsed onto the s-fold box-convolution kernel B_s, so values need a
/// single 1-D quadrature and derivatives reduce to kernel-derivative
/// quadratures (order < s) and pure difference formulas (order s) in f.
class SteklovMean {
  public:
    SteklovMean(FunctionSpec f, double h, int s, const IntervalPair& intervals,
                int quad_points_per_axis = 16);

    double value(double t) const;
    double derivative(int r, double t) const;  // r in [0, s]

    double h() const { return h_; }
    int order() const { return s_; }

  private:
    double shifted_integral(int i, int kernel_derivative, double t) const;

    FunctionSpec f_;
    double h_;
    int s_;
    IntervalPair intervals_;
    int qpts_;
    std::vector<double> knots_;  // kernel knots, s+1 of them
};

/// Tabulates the Lemma-style Steklov properties over a decreasing h grid:
/// proximity ||f - f_{h,s}||, derivative bounds, and the empirical constants
/// they imply. The derivative-norm constants are reported against the
/// order-matched modulus omega_r (the order-s variant is tabulated too but
/// grows without bound for r < s on smooth inputs).
ExperimentReport steklov_property_report(const FunctionSpec& f, int s,
                                         const IntervalPair& intervals,
                                         const std::vector<double>& h_grid,
                                         int quad_points_per_axis = 16);

}  // namespace hybridop
