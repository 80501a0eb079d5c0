#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zetalab/complex_kernel.hpp"

using namespace zetalab;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma at known points") {
    CHECK(std::abs(gamma_complex(1.0) - 1.0) < 1e-14);
    CHECK(std::abs(gamma_complex(5.0) - 24.0) < 24.0 * 1e-14);
    CHECK(std::abs(gamma_complex(0.5) - std::sqrt(std::numbers::pi)) < 1e-14);
    for (const auto& [z, g] : oracle::kGammaSamples) {
        CAPTURE(z);
        CHECK(rel(gamma_complex(z), g) < 1e-13);
    }
}

TEST_CASE("gamma agrees with the Stirling oracle") {
    const auto points = oracle::random_strip_points(200, 10.0, 11, -9.5, 9.5);
    for (const Complex z : points) {
        if (z.real() < 0.0 && std::abs(z.real() - std::round(z.real())) < 1e-3) {
            continue;
        }
        CAPTURE(z);
        CHECK(rel(gamma_complex(z), oracle::stirling_gamma(z)) < 1e-12);
    }
}

TEST_CASE("gamma poles") {
    CHECK_THROWS_AS((void)gamma_complex(0.0), PoleError);
    CHECK_THROWS_AS((void)gamma_complex(-3.0), PoleError);
    CHECK_THROWS_AS((void)gamma_complex(Complex(-7.0, 5e-10)), PoleError);
    CHECK_THROWS_AS((void)gamma_complex(Complex(-2.0 + 1e-10, 0.0)), DomainError);
    CHECK_NOTHROW((void)gamma_complex(Complex(-2.0 + 1e-6, 0.0)));
}

TEST_CASE("gamma conjugate symmetry and reflection") {
    const auto points = oracle::random_strip_points(200, 10.0, 12, -4.0, 4.0);
    for (const Complex z : points) {
        CAPTURE(z);
        CHECK(rel(gamma_complex(std::conj(z)), std::conj(gamma_complex(z))) < 1e-14);
        const Complex lhs = gamma_complex(z) * gamma_complex(1.0 - z);
        const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
        CHECK(rel(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("log_abs_gamma") {
    CHECK(std::abs(log_abs_gamma(Complex(5.0, 0.0)) - std::log(24.0)) < 1e-14);
    const Complex z(0.3, 0.7);
    CHECK(std::abs(log_abs_gamma(z) - std::log(std::abs(gamma_complex(z)))) < 1e-13);
    // Large imaginary part: ln|Gamma(1/2 + it)| = ln sqrt(pi / cosh(pi t)).
    const double t = 400.0;
    const double expected = 0.5 * std::log(std::numbers::pi) - 0.5 * (std::numbers::pi * t - std::log(2.0));
    CHECK(std::abs(log_abs_gamma(Complex(0.5, t)) - expected) < 1e-10 * std::abs(expected));
}

TEST_CASE("cpow_neg modulus and phase") {
    const auto points = oracle::random_strip_points(200, 1e3, 13, -3.0, 3.0);
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> logn(0.0, std::log(1e6));
    for (const Complex s : points) {
        const double n = std::floor(std::exp(logn(rng)));
        CAPTURE(s);
        CAPTURE(n);
        const Complex v = cpow_neg(n, s);
        CHECK(std::abs(v) == doctest::Approx(std::pow(n, -s.real())).epsilon(1e-15));
        CHECK(rel(v, std::pow(Complex(n, 0.0), -s)) < 1e-9);
    }
    CHECK(cpow_neg(1.0, Complex(0.3, 100.0)) == Complex(1.0, 0.0));
}

TEST_CASE("expm1 is accurate near zero") {
    const Complex z(1e-10, -2e-10);
    const Complex expected = z + z * z / 2.0;
    CHECK(rel(zetalab::expm1(z), expected) < 1e-15);
    const Complex w(0.7, 2.0);
    CHECK(rel(zetalab::expm1(w), std::exp(w) - 1.0) < 1e-15);
}

TEST_CASE("sin_pi keeps relative accuracy near integers") {
    const double eps = std::ldexp(1.0, -30);  // 3 + eps is exact
    const double expected = -std::sin(std::numbers::pi * eps);
    CHECK(sin_pi(Complex(3.0 + eps, 0.0)).real() == doctest::Approx(expected).epsilon(1e-15));
    CHECK(std::abs(sin_pi(Complex(0.5, 0.0)) - 1.0) < 1e-16);
}

TEST_CASE("chi factor") {
    CHECK(std::abs(chi_factor(StripPoint(0.5, 0.0)) - 1.0) < 1e-14);
    CHECK(std::abs(std::abs(chi_factor(StripPoint(0.5, 10.0))) - 1.0) < 1e-13);
    for (int i = 1; i <= 9; ++i) {
        for (int j = -10; j <= 10; ++j) {
            const StripPoint s(0.1 * i, 3.0 * j);
            CAPTURE(s.value());
            CHECK(std::abs(chi_factor(s) * chi_factor(s.reflected()) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("strip point domain") {
    CHECK_NOTHROW(StripPoint(kStripEpsilon, 1.0));
    CHECK_NOTHROW(StripPoint(1.0 - kStripEpsilon, 1.0));
    CHECK_THROWS_AS(StripPoint(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(StripPoint(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(StripPoint(0.5, std::nan("")), DomainError);
    const StripPoint s(0.3, 4.0);
    CHECK(s.reflected().value() == Complex(0.7, -4.0));
    CHECK(s.conjugated().value() == Complex(0.3, -4.0));
}

TEST_CASE("compensated sum") {
    CompensatedSum sum;
    sum += 1e16;
    for (int i = 0; i < 1000; ++i) {
        sum += Complex(1.0, 0.5);
    }
    sum += -1e16;
    CHECK(sum.value() == Complex(1000.0, 500.0));
    CHECK(sum.count() == 1002);
}

TEST_CASE("require_finite") {
    CHECK_THROWS_AS((void)require_finite(Complex(INFINITY, 0.0), "x"), NumericalError);
    CHECK(require_finite(Complex(1.0, 2.0), "x") == Complex(1.0, 2.0));
}
