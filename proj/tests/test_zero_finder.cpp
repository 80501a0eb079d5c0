#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetalab/zero_finder.hpp"
#include "zetalab/zeta_reps.hpp"

using namespace zetalab;

TEST_CASE("winding counts") {
    CHECK(winding_count({0.05, 0.95, 0.5, 13.0}) == 0);
    CHECK(winding_count({0.05, 0.95, 13.0, 15.0}) == 1);
    CHECK(winding_count({0.05, 0.95, 20.0, 26.0}) == 2);
    CHECK(winding_count({0.05, 0.95, 0.5, 50.0}) == 10);
    // Lower half plane mirrors the upper.
    CHECK(winding_count({0.05, 0.95, -26.0, -20.0}) == 2);
}

TEST_CASE("winding count is additive") {
    const double cuts[] = {10.0, 17.3, 23.9, 31.1, 36.2, 41.7};
    int total = 0;
    for (std::size_t i = 0; i + 1 < std::size(cuts); ++i) {
        total += winding_count({0.05, 0.95, cuts[i], cuts[i + 1]});
    }
    CHECK(total == winding_count({0.05, 0.95, cuts[0], cuts[std::size(cuts) - 1]}));
    CHECK(total == 7);
}

TEST_CASE("winding count errors") {
    CHECK_THROWS_AS((void)winding_count({0.05, 0.95, oracle::kZeroHeights[0], 20.0}), BoundaryTooClose);
    CHECK_THROWS_AS((void)winding_count({0.5, 0.4, 1.0, 2.0}), DomainError);
    CHECK_THROWS_AS((void)winding_count({0.0, 0.9, 1.0, 2.0}), DomainError);
    ZeroFinderOptions coarse;
    coarse.max_samples_per_unit = 1;
    CHECK_THROWS_AS((void)winding_count({0.05, 0.95, 10.0, 50.0, 1}, coarse), StepTooCoarse);
}

TEST_CASE("find zeros up to t = 30") {
    const auto zeros = find_zeros(0.5, 30.0, 1e-10);
    REQUIRE(zeros.size() == 3);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        CAPTURE(i);
        CHECK(std::abs(zeros[i].s.imag() - oracle::kZeroHeights[i]) < 1e-9);
        CHECK(std::abs(zeros[i].s.real() - 0.5) < 1e-9);
        CHECK(zeros[i].residual < 1e-8);
        CHECK(zeros[i].residual_finite_b < 1e-8);
        CHECK(zeros[i].source_rect.contains(zeros[i].s));
    }
    CHECK(find_zeros(0.5, 10.0, 1e-10).empty());
}

TEST_CASE("find zeros is deterministic across thread counts") {
    ZeroFinderOptions one;
    one.threads = 1;
    ZeroFinderOptions four;
    four.threads = 4;
    const auto a = find_zeros(10.0, 45.0, 1e-10, one);
    const auto b = find_zeros(10.0, 45.0, 1e-10, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].s == b[i].s);
        CHECK(a[i].iterations == b[i].iterations);
    }
}

TEST_CASE("find zeros input checks") {
    CHECK_THROWS_AS((void)find_zeros(30.0, 10.0, 1e-10), InputError);
    CHECK_THROWS_AS((void)find_zeros(0.5, 10.0, -1.0), InputError);
}

TEST_CASE("refine zero") {
    const ZeroCandidate z = refine_zero(Complex(0.5, 14.1), 1e-12);
    CHECK(std::abs(z.s - Complex(0.5, oracle::kZeroHeights[0])) < 1e-10);
    CHECK(z.residual < 1e-10);
    CHECK(z.iterations >= 1);
    const ZeroCandidate c = refine_zero(Complex(0.5, -21.0), 1e-12);
    CHECK(std::abs(c.s - Complex(0.5, -oracle::kZeroHeights[1])) < 1e-10);
    CHECK_THROWS_AS((void)refine_zero(Complex(0.5, 2.0), 1e-12), NoConvergence);
    CHECK_THROWS_AS((void)refine_zero(Complex(1.5, 14.0), 1e-12), DomainError);
}
