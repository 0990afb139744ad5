#include <doctest.h>

#include <cmath>
#include <random>

#include "hybridop/basis.hpp"

using namespace hybridop;

namespace {

// Brute-force rising factorial in log space, the oracle for log_pochhammer.
double log_product_oracle(double a, long k) {
    double s = 0.0;
    for (long i = 0; i < k; ++i) s += std::log(a + i);
    return s;
}

// Direct (non-log) weight evaluation, usable only where nothing overflows.
double direct_weight(const OperatorParams& p, long k, double x) {
    double poch = 1.0;
    for (long i = 0; i < k; ++i) poch *= p.shape() + i;
    double fact = 1.0;
    for (long i = 2; i <= k; ++i) fact *= i;
    return poch * std::pow(p.c * x, k) / (fact * std::pow(p.c * x + 1.0, p.shape() + k));
}

double fd_weight_derivative(const OperatorParams& p, long k, double x) {
    const double h = 1e-6 * std::max(1.0, x);
    return (baskakov_weight(p, k, x + h) - baskakov_weight(p, k, x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("rising factorial log evaluation") {
    CHECK(log_pochhammer(7.0, 0) == 0.0);
    CHECK(log_pochhammer(4.0, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
    CHECK(log_pochhammer(2.5, 20) ==
          doctest::Approx(log_product_oracle(2.5, 20)).epsilon(1e-13));
    // spans the small-k direct path and the lgamma path
    for (double a : {0.5, 2.5, 17.0, 400.0})
        for (long k : {1L, 5L, 29L, 30L, 31L, 100L, 5000L})
            CHECK(log_pochhammer(a, k) ==
                  doctest::Approx(log_product_oracle(a, k)).epsilon(1e-12));
}

TEST_CASE("weight values against direct substitution") {
    OperatorParams p(10.0, 0.5);
    CHECK(baskakov_weight(p, 0, 0.0) == 1.0);
    CHECK(baskakov_weight(OperatorParams(3.0, 1.0), 0, 0.0) == 1.0);
    const double expected = 20.0 * 0.5 / std::pow(1.5, 21);
    CHECK(baskakov_weight(p, 1, 1.0) == doctest::Approx(expected).epsilon(1e-13));
    for (long k : {0L, 1L, 2L, 5L, 12L})
        CHECK(baskakov_weight(p, k, 0.7) ==
              doctest::Approx(direct_weight(p, k, 0.7)).epsilon(1e-13));
}

TEST_CASE("log-space and direct evaluation agree where direct survives") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> ux(0.01, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        OperatorParams p(1.0 + (rng() % 40), (rng() % 2) ? 1.0 : 0.5);
        const long k = static_cast<long>(rng() % 40);
        const double x = ux(rng);
        const double direct = direct_weight(p, k, x);
        if (!std::isfinite(direct) || direct == 0.0) continue;
        CHECK(baskakov_weight(p, k, x) == doctest::Approx(direct).epsilon(1e-13));
        CHECK(std::exp(log_baskakov_weight(p, k, x)) ==
              doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("weight nonnegativity and no premature underflow") {
    OperatorParams p(200.0, 1.0);
    for (long k = 0; k <= 600; ++k) {
        const double w = baskakov_weight(p, k, 1.5);
        CHECK(w >= 0.0);
    }
    // a far-tail weight is tiny but its log is still finite
    CHECK(std::isfinite(log_baskakov_weight(p, 2000, 1.5)));
}

TEST_CASE("kernel density values") {
    CHECK(erlang_density(1.0, 0, 0.0) == 1.0);
    CHECK(erlang_density(5.0, 3, 1.0) ==
          doctest::Approx(5.0 * std::exp(-5.0) * 125.0 / 6.0).epsilon(1e-14));
    for (double t : {0.0, 0.3, 2.0, 10.0})
        CHECK(erlang_density(7.0, 4, t) >= 0.0);
    CHECK(std::exp(log_erlang_density(5.0, 3, 1.0)) ==
          doctest::Approx(erlang_density(5.0, 3, 1.0)).epsilon(1e-14));
}

TEST_CASE("truncation window mass capture") {
    SUBCASE("x = 0 concentrates at k = 0") {
        auto w = truncation_window(OperatorParams(50.0, 1.0), 0.0, 1e-12);
        CHECK(w.k_lo == 0);
        CHECK(w.k_hi == 0);
        CHECK(w.captured_mass == 1.0);
    }
    SUBCASE("window straddles the mode and captures the mass") {
        OperatorParams p(50.0, 1.0);
        auto w = truncation_window(p, 2.0, 1e-14);
        CHECK(w.k_lo <= 100);
        CHECK(w.k_hi >= 100);
        double mass = 0.0;
        for (long k = w.k_lo; k <= w.k_hi; ++k) mass += baskakov_weight(p, k, 2.0);
        CHECK(mass >= 1.0 - 1e-14);
        CHECK(w.captured_mass == doctest::Approx(mass).epsilon(1e-13));
    }
    SUBCASE("direct summation at modest parameters") {
        OperatorParams p(10.0, 0.5);
        auto w = truncation_window(p, 1.0, 1e-12);
        double mass = 0.0;
        for (long k = w.k_lo; k <= w.k_hi; ++k) mass += baskakov_weight(p, k, 1.0);
        CHECK(mass >= 1.0 - 1e-12);
        CHECK(mass <= 1.0 + 1e-12);
    }
}

TEST_CASE("partition of unity over the acceptance grid") {
    for (double n : {5.0, 10.0, 50.0, 200.0}) {
        for (double c : {0.1, 0.5, 1.0}) {
            OperatorParams p(n, c);
            for (double x = 0.0; x <= 5.0; x += 1.25) {
                auto w = truncation_window(p, x, 1e-14);
                double mass = 0.0;
                for (long k = w.k_lo; k <= w.k_hi; ++k) mass += baskakov_weight(p, k, x);
                CHECK(std::fabs(mass - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("weight derivative identity") {
    SUBCASE("k = 0 collapses to a single shifted term") {
        OperatorParams p(10.0, 0.5);
        const double x = 0.7;
        CHECK(baskakov_weight_derivative(p, 0, x) ==
              doctest::Approx(-10.0 * baskakov_weight(OperatorParams(10.5, 0.5), 0, x))
                  .epsilon(1e-14));
    }
    SUBCASE("matches finite differences at c = 1 and c = 0.5") {
        for (double c : {1.0, 0.5}) {
            OperatorParams p(10.0, c);
            const double analytic = baskakov_weight_derivative(p, 3, 0.7);
            CHECK(analytic == doctest::Approx(fd_weight_derivative(p, 3, 0.7)).epsilon(1e-6));
        }
    }
    SUBCASE("unshifted n+1 variant is wrong for c != 1") {
        OperatorParams p(10.0, 0.5);
        const double x = 0.7;
        OperatorParams unit(11.0, 0.5);
        const double wrong =
            10.0 * (baskakov_weight(unit, 2, x) - baskakov_weight(unit, 3, x));
        const double fd = fd_weight_derivative(p, 3, x);
        CHECK(std::fabs(wrong - fd) / std::fabs(fd) > 1e-4);
    }
    SUBCASE("holds for k up to 200") {
        OperatorParams p(120.0, 1.0);
        for (long k : {1L, 10L, 50L, 120L, 200L}) {
            const double analytic = baskakov_weight_derivative(p, k, 1.3);
            const double fd = fd_weight_derivative(p, k, 1.3);
            const double scale = std::max(std::fabs(analytic), std::fabs(fd));
            if (scale < 1e-280) continue;  // both underflowed; nothing to compare
            CHECK(std::fabs(analytic - fd) / scale <= 1e-6);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(OperatorParams(0.5, 1.0));
    CHECK_THROWS(OperatorParams(10.0, 0.0));
    CHECK_THROWS(OperatorParams(10.0, 1.5));
}
