#include "hybridop/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hybridop/function_spec.hpp"
#include "hybridop/operator_eval.hpp"

namespace hybridop {

namespace {

// Extended-precision scalar for the alternating closed-form sums. The raw
// moment formula cancels down to O(n^{-r}) coefficients from O(c^{-r})
// intermediates, which binary64 cannot survive for r near 12.
using quad = __float128;

std::vector<quad> binomials(int m) {
    std::vector<quad> b(static_cast<size_t>(m) + 1);
    b[0] = 1;
    for (int j = 1; j <= m; ++j) b[static_cast<size_t>(j)] =
        b[static_cast<size_t>(j) - 1] * quad(m - j + 1) / quad(j);
    return b;
}

// Coefficients of M_{n,r}(x) in powers of x, computed in quad precision.
std::vector<quad> raw_moment_coeffs_quad(const OperatorParams& params, int r) {
    const quad a = quad(params.n) / quad(params.c);
    const quad c = quad(params.c);
    const auto binom_r = binomials(r);
    std::vector<quad> coeffs(static_cast<size_t>(r) + 1, quad(0));
    for (int j = 0; j <= r; ++j) {
        quad poch = 1;  // (n/c)_j
        for (int i = 0; i < j; ++i) poch *= a + quad(i);
        quad falling = 1;  // prod_{k=1}^{r-j} (n/c - k)
        for (int k = 1; k <= r - j; ++k) falling *= a - quad(k);
        const quad sign = ((r - j) % 2 == 0) ? quad(1) : quad(-1);
        const quad term = binom_r[static_cast<size_t>(j)] * poch * sign * falling;
        // expand (1 + c x)^j
        const auto binom_j = binomials(j);
        quad cpow = 1;
        for (int l = 0; l <= j; ++l) {
            coeffs[static_cast<size_t>(l)] += term * binom_j[static_cast<size_t>(l)] * cpow;
            cpow *= c;
        }
    }
    quad ninv = 1;
    for (int i = 0; i < r; ++i) ninv /= quad(params.n);
    for (auto& v : coeffs) v *= ninv;
    return coeffs;
}

}  // namespace

MomentPolynomial raw_moment_closed(const OperatorParams& params, int r) {
    if (r < 0 || r > 12) throw std::invalid_argument("raw_moment_closed: r must lie in [0, 12]");
    const auto qc = raw_moment_coeffs_quad(params, r);
    std::vector<double> coeffs(qc.size());
    for (size_t j = 0; j < qc.size(); ++j) coeffs[j] = static_cast<double>(qc[j]);
    return {Polynomial(std::move(coeffs)), r, false, params};
}

std::vector<MomentPolynomial> central_moment_recurrence(const OperatorParams& params, int m_max) {
    if (m_max < 0 || m_max > 12)
        throw std::invalid_argument("central_moment_recurrence: m_max must lie in [0, 12]");
    const double n = params.n, c = params.c;
    std::vector<MomentPolynomial> out;
    out.push_back({Polynomial::constant(1.0), 0, true, params});
    if (m_max == 0) return out;
    out.push_back({Polynomial::constant(1.0 / n), 1, true, params});
    const Polynomial x_poly({0.0, 1.0});
    const Polynomial x_one_cx({0.0, 1.0, c});  // x(1+cx)
    for (int m = 1; m < m_max; ++m) {
        const Polynomial& mu_m = out[static_cast<size_t>(m)].poly;
        const Polynomial& mu_prev = out[static_cast<size_t>(m) - 1].poly;
        Polynomial next = x_one_cx * (mu_m.derivative() + mu_prev.scaled(m)) +
                          mu_m.scaled(m + 1) + (x_poly * mu_prev).scaled(m);
        out.push_back({next.scaled(1.0 / n), m + 1, true, params});
    }
    return out;
}

MomentPolynomial central_from_raw(const OperatorParams& params, int m) {
    if (m < 0 || m > 12) throw std::invalid_argument("central_from_raw: m must lie in [0, 12]");
    // mu_m(x) = sum_j C(m,j) (-x)^{m-j} M_j(x), assembled in quad precision
    // before rounding once to binary64.
    const auto binom = binomials(m);
    std::vector<quad> acc(static_cast<size_t>(m) + 1, quad(0));
    for (int j = 0; j <= m; ++j) {
        const auto mj = raw_moment_coeffs_quad(params, j);
        const quad sign = ((m - j) % 2 == 0) ? quad(1) : quad(-1);
        const quad factor = sign * binom[static_cast<size_t>(j)];
        for (size_t l = 0; l < mj.size(); ++l)
            acc[l + static_cast<size_t>(m - j)] += factor * mj[l];
    }
    std::vector<double> coeffs(acc.size());
    for (size_t j = 0; j < acc.size(); ++j) coeffs[j] = static_cast<double>(acc[j]);
    return {Polynomial(std::move(coeffs)), m, true, params};
}

LambdaNorm lambda_norm(const OperatorParams& params, int s) {
    if (s < 0 || s > 12) throw std::invalid_argument("lambda_norm: s must lie in [0, 12]");
    double v = 1.0;
    for (int i = 0; i < s; ++i) v *= (params.n + i * params.c) / params.n;
    return {s, v};
}

double qn_reference(const OperatorParams& params, int r, double x) {
    const double n = params.n, c = params.c;
    const double rr = static_cast<double>(r);
    return std::sqrt(n * x * (c * x + 2.0) + rr * (x * (c * x + 4.0) + 3.0) +
                     rr * rr * (x + 1.0) * (x + 1.0) + 2.0);
}

double transformed_second_moment_printed(const OperatorParams& params, int r, double x) {
    const double q = qn_reference(params, r, x);
    return q * q / (params.n * params.n);
}

double transformed_second_central_moment(const OperatorParams& params, int r, double x,
                                         const EvalConfig& cfg) {
    if (r < 0 || r > 6)
        throw std::invalid_argument("transformed_second_central_moment: r must lie in [0, 6]");
    FunctionSpec sq = functions::polynomial({x * x, -2.0 * x, 1.0});
    sq.label = "(t-x)^2";
    return apply_transformed(sq, r, x, params, cfg).value;
}

double transformed_second_moment_exact(const OperatorParams& params, int r, double x) {
    // Under the n + rc basis shift the index K follows the weight family with
    // mean (n+rc)x and variance (n+rc)x(1+cx); the kernel contributes the
    // Gamma(K+r+1, rate n) moments.
    const double n = params.n, c = params.c;
    const double np = n + r * c;
    const double mean_k = np * x;
    const double ex_k2 = mean_k * mean_k + np * x * (1.0 + c * x);
    const double m1 = (mean_k + r + 1.0) / n;
    const double m2 =
        (ex_k2 + (2.0 * r + 3.0) * mean_k + (r + 1.0) * (r + 2.0)) / (n * n);
    return m2 - 2.0 * x * m1 + x * x;
}

}  // namespace hybridop
