#pragma once

// Test-only reference computations. None of these call into the library's evaluation
// paths, so they can check them independently.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// Reference values from mpmath at 30 digits.
inline constexpr double kZeroHeights[10] = {
    14.13472514173469379, 21.022039638771554993, 25.010857580145688763, 30.42487612585951321,
    32.935061587739189691, 37.586178158825671257, 40.918719012147495187, 43.327073280914999519,
    48.005150881167159728, 49.773832477672302182};

struct ZetaSample {
    Complex s;
    Complex zeta;
};

inline const std::vector<ZetaSample> kZetaSamples = {
    {{0.5, 14.0}, {0.022241142609993589246, -0.1032581232664500579}},
    {{0.3, 7.0}, {1.0171314988950936839, 0.43944400689634059683}},
    {{0.7, 3.0}, {0.57125187243516474642, -0.092322873907149788113}},
    {{0.05, -45.0}, {3.9523539330795491236, -3.708004061131558715}},
    {{0.95, 33.3}, {0.3894592602032284139, 0.47116160044802810964}},
    {{0.5, 0.0}, {-1.4603545088095868129, 0.0}},
    {{0.2, 0.0}, {-0.73392092489634060871, 0.0}},
    {{1.5, 2.0}, {0.7521818690342325726, -0.33397906099331399421}},
};

struct GammaSample {
    Complex z;
    Complex gamma;
};

inline const std::vector<GammaSample> kGammaSamples = {
    {{0.3, 0.7}, {0.30968625674374915557, -0.85678775293927057254}},
    {{-2.5, 1.0}, {-0.041736625807893613745, -0.086369107369763484694}},
    {{7.25, -3.5}, {413.38648914857977482, -252.49453307381923277}},
    {{0.01, 9.0}, {-5.2067849202665456216e-7, -3.3509176302226347144e-7}},
    {{-8.7, -0.3}, {-0.000012355420339461274084, 2.1808581605391876176e-6}},
};

// Gamma by upward recurrence to re(z) >= 20 and the Stirling series there; reflection for
// re(z) < 0.5. Independent of the Lanczos route.
inline Complex stirling_gamma(Complex z) {
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        return pi / (std::sin(pi * z) * stirling_gamma(1.0 - z));
    }
    Complex shift = 1.0;
    while (z.real() < 20.0) {
        shift *= z;
        z += 1.0;
    }
    // B_2k / (2k (2k-1))
    constexpr double c[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188, -691.0 / 360360,
                            1.0 / 156};
    Complex series = 0.0;
    Complex zpow = 1.0 / z;
    for (double ck : c) {
        series += ck * zpow;
        zpow /= z * z;
    }
    const Complex log_gamma = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series;
    return std::exp(log_gamma) / shift;
}

// zeta(s) for re(s) > 1 from plain partial sums S_N, N = base * 2^k, with a Richardson table
// eliminating N^{1-s}, N^{-s}, N^{-1-s}, ... (the partial sum error expands in these powers).
inline Complex richardson_zeta(Complex s, std::int64_t base = 4096, int levels = 5) {
    std::vector<Complex> table;
    std::vector<double> ns;
    Complex sum = 0.0;
    std::int64_t n = 0;
    for (int k = 0; k < levels; ++k) {
        const std::int64_t target = base << k;
        while (n < target) {
            ++n;
            sum += std::pow(Complex(static_cast<double>(n), 0.0), -s);
        }
        table.push_back(sum);
        ns.push_back(static_cast<double>(target));
    }
    // Exponents of the error terms: s - 1, s, s + 1, s + 3 (Euler-Maclaurin drops even ones).
    const Complex exponents[] = {s - 1.0, s, s + 1.0, s + 3.0};
    for (int level = 0; level + 1 < levels; ++level) {
        const Complex ratio = std::pow(Complex(2.0, 0.0), -exponents[level]);
        for (std::size_t i = table.size() - 1; i > static_cast<std::size_t>(level); --i) {
            table[i] = (table[i] - ratio * table[i - 1]) / (1.0 - ratio);
        }
    }
    return table.back();
}

// Partial sums of the alternating harmonic series, averaged over consecutive N.
inline double averaged_alternating_harmonic(std::int64_t n_terms) {
    double sum = 0.0;
    for (std::int64_t n = n_terms; n >= 1; --n) {  // smallest terms first
        sum += (n % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(n);
    }
    const double next = (n_terms % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(n_terms + 1);
    return sum + 0.5 * next;
}

// Naive per-term sum of n^{-s} - conj(n^{-(1-s)}) using std::pow on complex numbers.
inline Complex naive_difference_series(Complex s, std::int64_t b) {
    Complex sum = 0.0;
    for (std::int64_t n = 1; n <= b; ++n) {
        const Complex nn(static_cast<double>(n), 0.0);
        sum += std::pow(nn, -s) - std::conj(std::pow(nn, -(1.0 - s)));
    }
    return sum;
}

inline std::vector<Complex> random_strip_points(std::size_t count, double t_max, std::uint64_t seed,
                                                double sigma_lo = 0.05, double sigma_hi = 0.95) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> sigma(sigma_lo, sigma_hi);
    std::uniform_real_distribution<double> t(-t_max, t_max);
    std::vector<Complex> points;
    for (std::size_t i = 0; i < count; ++i) {
        const double a = sigma(rng);
        points.emplace_back(a, t(rng));
    }
    return points;
}

}  // namespace oracle
