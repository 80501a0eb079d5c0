#pragma once

#include <complex>
#include <cstddef>

#include "zetalab/error.hpp"

namespace zetalab {

using Complex = std::complex<double>;

// Exclusion margins around the Gamma poles and the edges of the critical strip.
inline constexpr double kPoleEpsilon = 1e-9;
inline constexpr double kStripEpsilon = 1e-6;

// A point s = sigma + i t with kStripEpsilon <= sigma <= 1 - kStripEpsilon.
class StripPoint {
public:
    // Throws DomainError when s is not finite or lies outside the strip.
    explicit StripPoint(Complex s);
    StripPoint(double sigma, double t) : StripPoint(Complex(sigma, t)) {}

    [[nodiscard]] Complex value() const noexcept { return s_; }
    [[nodiscard]] double sigma() const noexcept { return s_.real(); }
    [[nodiscard]] double t() const noexcept { return s_.imag(); }

    // 1 - s, which is again in the strip.
    [[nodiscard]] StripPoint reflected() const { return StripPoint(1.0 - s_); }
    [[nodiscard]] StripPoint conjugated() const { return StripPoint(std::conj(s_)); }

    static bool contains(Complex s) noexcept;

private:
    Complex s_;
};

[[nodiscard]] bool is_finite(Complex z) noexcept;

// Returns z, or throws NumericalError naming `what` if a component is NaN or infinite.
Complex require_finite(Complex z, const char* what);

// n^{-s} for real n >= 1 via the principal real logarithm. The modulus is computed as
// pow(n, -re(s)) so |n^{-s}| = n^{-re(s)} holds to the last bit of pow.
[[nodiscard]] Complex cpow_neg(double n, Complex s);

// base^{s} for real base > 0.
[[nodiscard]] Complex cpow(double base, Complex s);

// e^z - 1 without cancellation for small |z|.
[[nodiscard]] Complex expm1(Complex z);

// sin(pi z) with the argument reduced modulo 2 before multiplying by pi, so values near
// the integers keep full relative accuracy.
[[nodiscard]] Complex sin_pi(Complex z);

// Gamma(z) from a g = 7, 15-term Lanczos sum; the reflection formula is used for
// re(z) < 1/2. Relative error is about 1e-14 for |z| <= 10 and degrades slowly with |z|;
// |z| beyond ~170 overflows (reported as NumericalError).
// Throws PoleError within kPoleEpsilon of 0, -1, -2, ...
[[nodiscard]] Complex gamma_complex(Complex z);

// ln|Gamma(z)| for re(z) > 0. Does not overflow for large |im(z)|.
[[nodiscard]] double log_abs_gamma(Complex z);

// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), so that zeta(s) = chi(s) zeta(1 - s).
[[nodiscard]] Complex chi_factor(const StripPoint& s);

// Neumaier-compensated accumulator for complex terms. Error stays near one ulp of the
// largest partial sum instead of growing with the number of terms.
class CompensatedSum {
public:
    void add(Complex x) noexcept;
    CompensatedSum& operator+=(Complex x) noexcept {
        add(x);
        return *this;
    }

    [[nodiscard]] Complex value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }
    [[nodiscard]] std::size_t count() const noexcept { return count_; }

private:
    static void add_component(double& sum, double& comp, double x) noexcept;

    double re_ = 0.0;
    double re_c_ = 0.0;
    double im_ = 0.0;
    double im_c_ = 0.0;
    std::size_t count_ = 0;
};

}  // namespace zetalab
