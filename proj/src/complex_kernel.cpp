#include "zetalab/complex_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "constants.hpp"

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * kPi);

// Lanczos partial-fraction sum A(z) for Gamma(z + 1).
Complex lanczos_sum(Complex z) {
    const auto& c = detail::kLanczosCoefficients;
    Complex sum = c[0];
    for (std::size_t k = 1; k < c.size(); ++k) {
        sum += c[k] / (z + static_cast<double>(k));
    }
    return sum;
}

}  // namespace

StripPoint::StripPoint(Complex s) : s_(s) {
    if (!contains(s)) {
        throw DomainError("point " + std::to_string(s.real()) + (s.imag() < 0 ? "" : "+") +
                          std::to_string(s.imag()) + "i is outside the critical strip");
    }
}

bool StripPoint::contains(Complex s) noexcept {
    return is_finite(s) && s.real() >= kStripEpsilon && s.real() <= 1.0 - kStripEpsilon;
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex require_finite(Complex z, const char* what) {
    if (!is_finite(z)) {
        throw NumericalError(std::string(what) + ": result is not finite");
    }
    return z;
}

Complex cpow_neg(double n, Complex s) {
    const double modulus = std::pow(n, -s.real());
    const double phase = -s.imag() * std::log(n);
    return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

Complex cpow(double base, Complex s) {
    const double modulus = std::pow(base, s.real());
    const double phase = s.imag() * std::log(base);
    return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

Complex expm1(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
    const double half = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * half * half;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

Complex sin_pi(Complex z) {
    const double n = std::nearbyint(z.real());
    const double r = z.real() - n;
    const double y = kPi * z.imag();
    Complex v{std::sin(kPi * r) * std::cosh(y), std::cos(kPi * r) * std::sinh(y)};
    if (std::fmod(n, 2.0) != 0.0) {
        v = -v;
    }
    return v;
}

Complex gamma_complex(Complex z) {
    if (!is_finite(z)) {
        throw DomainError("gamma_complex: argument is not finite");
    }
    if (z.real() < 0.5) {
        const double n = std::nearbyint(z.real());
        if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) < kPoleEpsilon) {
            throw PoleError("gamma_complex: argument within pole margin of " +
                            std::to_string(static_cast<long long>(n)));
        }
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        return require_finite(kPi / (sin_pi(z) * gamma_complex(1.0 - z)), "gamma_complex");
    }
    const Complex w = z - 1.0;
    const Complex t = w + detail::kLanczosG + 0.5;
    const Complex log_prefix = (w + 0.5) * std::log(t) - t + kLogSqrtTwoPi;
    const Complex result = std::exp(log_prefix) * lanczos_sum(w);
    if (result == Complex{}) {
        throw NumericalError("gamma_complex: result underflows");
    }
    return require_finite(result, "gamma_complex");
}

double log_abs_gamma(Complex z) {
    if (!(z.real() > 0.0) || !is_finite(z)) {
        throw DomainError("log_abs_gamma: requires re(z) > 0");
    }
    const Complex w = z - 1.0;
    const Complex t = w + detail::kLanczosG + 0.5;
    const Complex log_prefix = (w + 0.5) * std::log(t) - t;
    return log_prefix.real() + kLogSqrtTwoPi + std::log(std::abs(lanczos_sum(w)));
}

Complex chi_factor(const StripPoint& point) {
    const Complex s = point.value();
    const Complex value = cpow(2.0, s) * cpow(kPi, s - 1.0) * sin_pi(0.5 * s) * gamma_complex(1.0 - s);
    return require_finite(value, "chi_factor");
}

void CompensatedSum::add_component(double& sum, double& comp, double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
        comp += (sum - t) + x;
    } else {
        comp += (x - t) + sum;
    }
    sum = t;
}

void CompensatedSum::add(Complex x) noexcept {
    add_component(re_, re_c_, x.real());
    add_component(im_, im_c_, x.imag());
    ++count_;
}

}  // namespace zetalab
