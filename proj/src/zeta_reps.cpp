#include "zetalab/zeta_reps.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "constants.hpp"

namespace zetalab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLogEtaRate = std::log(3.0 + std::sqrt(8.0));

void require_tolerance(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be a positive finite number");
    }
}

void require_index(std::int64_t b) {
    if (b < 1) {
        throw DomainError("truncation index b must be >= 1, got " + std::to_string(b));
    }
}

struct EulerMaclaurinTail {
    Complex correction;  // Sum_k B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}
    double bound = 0.0;
    int terms = 0;
};

// Bernoulli corrections of Sum_{n>=N} n^{-s}. Stops once the remainder bound
// |T_{K+1}| |s+2K+1| / (sigma+2K+1) drops below tol, or when the asymptotic terms stop
// decreasing (bound is then the smallest one seen, which the caller compares with tol).
EulerMaclaurinTail euler_maclaurin(Complex s, double n_cut, double tol) {
    const auto& coeff = detail::kEulerMaclaurinCoefficients;
    const Complex n_pow = cpow_neg(n_cut, s);
    const double inv_n2 = 1.0 / (n_cut * n_cut);
    Complex rising = s;
    double n_factor = 1.0 / n_cut;
    double previous = std::numeric_limits<double>::infinity();

    EulerMaclaurinTail tail;
    tail.bound = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= coeff.size(); ++k) {
        const double order = static_cast<double>(2 * k - 1);
        const Complex term = coeff[k - 1] * rising * n_pow * n_factor;
        const double magnitude = std::abs(term);
        const double bound = magnitude * std::abs(s + order) / (s.real() + order);
        tail.bound = bound;
        if (bound <= tol || magnitude > previous) {
            return tail;
        }
        tail.correction += term;
        tail.terms = static_cast<int>(k);
        previous = magnitude;
        rising *= (s + order) * (s + order + 1.0);
        n_factor *= inv_n2;
    }
    return tail;
}

struct Cutoff {
    std::int64_t n = 0;
    EulerMaclaurinTail tail;
};

// Smallest N = max(start, 10 + ceil(|s|/2)) * 2^j whose Euler-Maclaurin remainder is below
// tol / 1024. The extra margin costs a few Bernoulli terms and keeps truncation well under tol.
Cutoff choose_cutoff(Complex s, std::int64_t start, double tol, std::int64_t max_intervals) {
    constexpr double kMargin = 1.0 / 1024.0;
    std::int64_t n = std::max<std::int64_t>(start, 10 + static_cast<std::int64_t>(std::ceil(std::abs(s) / 2)));
    for (;;) {
        if (n - start > max_intervals) {
            char msg[128];
            std::snprintf(msg, sizeof msg, "tolerance %.3g needs more than %lld tail intervals", tol,
                          static_cast<long long>(max_intervals));
            throw ToleranceUnreachable(msg);
        }
        auto tail = euler_maclaurin(s, static_cast<double>(n), kMargin * tol);
        if (tail.bound <= kMargin * tol) {
            return {n, tail};
        }
        n *= 2;
    }
}

struct TailResult {
    Complex value;
    double bound = 0.0;
    std::int64_t terms = 0;
};

TailResult tail_integral_impl(Complex s, std::int64_t b, double tol, std::int64_t max_intervals) {
    const auto cut = choose_cutoff(s, b, tol, max_intervals);
    CompensatedSum sum;
    for (std::int64_t n = b; n < cut.n; ++n) {
        sum += tail_interval_term(s, n);
    }
    // Remainder past N: s * int_N^inf {x} x^{-s-1} dx = N^{-s}/2 - Euler-Maclaurin corrections.
    sum += 0.5 * cpow_neg(static_cast<double>(cut.n), s);
    sum += -cut.tail.correction;
    return {sum.value(), cut.tail.bound, (cut.n - b) + cut.tail.terms + 1};
}

}  // namespace

std::string_view to_string(RepresentationKind kind) noexcept {
    switch (kind) {
        case RepresentationKind::DirectSeries:
            return "direct";
        case RepresentationKind::EtaAccelerated:
            return "eta";
        case RepresentationKind::TruncatedLimit:
            return "truncated";
        case RepresentationKind::FiniteBExact:
            return "finite-b";
    }
    return "unknown";
}

RepresentationKind parse_representation(std::string_view name) {
    for (auto kind : {RepresentationKind::DirectSeries, RepresentationKind::EtaAccelerated,
                      RepresentationKind::TruncatedLimit, RepresentationKind::FiniteBExact}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    throw ParseError("unknown representation '" + std::string(name) +
                     "' (expected direct, eta, truncated or finite-b)");
}

EtaFactors EtaFactors::at(Complex s) { return {1.0 - 2.0 * cpow_neg(2.0, s), 1.0 - 2.0 * cpow(2.0, s - 1.0)}; }

EvalResult zeta_direct(Complex s, double tol) {
    require_tolerance(tol);
    if (!is_finite(s) || !(s.real() > 1.0)) {
        throw DomainError("direct series requires re(s) > 1");
    }
    const auto cut = choose_cutoff(s, 1, 0.5 * tol, kMaxTailIntervals);
    CompensatedSum sum;
    for (std::int64_t n = 1; n < cut.n; ++n) {
        sum += cpow_neg(static_cast<double>(n), s);
    }
    const double n_cut = static_cast<double>(cut.n);
    const Complex integral_tail = cpow(n_cut, 1.0 - s) / (s - 1.0);
    sum += integral_tail;
    sum += 0.5 * cpow_neg(n_cut, s);
    sum += cut.tail.correction;

    EvalResult r;
    r.value = require_finite(sum.value(), "zeta_direct");
    r.terms_used = cut.n + cut.tail.terms;
    r.est_error = cut.tail.bound +
                  static_cast<double>(r.terms_used) * kEps * std::max(std::abs(r.value), std::abs(integral_tail));
    r.representation = {RepresentationKind::DirectSeries, 1, tol};
    return r;
}

EvalResult eta_accelerated(Complex s, double tol) {
    require_tolerance(tol);
    if (!is_finite(s) || !(s.real() > 0.0)) {
        throw DomainError("eta series requires re(s) > 0");
    }
    // Error bound 3 (1 + 2|t|) e^{pi |t| / 2} / (|Gamma(s)| (3 + sqrt 8)^k).
    const double t = std::abs(s.imag());
    const double log_scale = std::log(3.0 * (1.0 + 2.0 * t)) + 0.5 * std::numbers::pi * t - log_abs_gamma(s);
    const double needed = (log_scale - std::log(tol)) / kLogEtaRate;
    const std::int64_t k_terms = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(needed)));
    const double k = static_cast<double>(k_terms);

    // d = cosh(k ln(3 + sqrt 8)); the b coefficients are kept as sign * exp(log|b|) and
    // divided by d on the fly so that large k never overflows.
    const double log_d = k * kLogEtaRate - std::numbers::ln2 + std::log1p(std::exp(-2.0 * k * kLogEtaRate));
    double b_sign = -1.0;
    double log_b = 0.0;
    double c = -1.0;
    CompensatedSum sum;
    for (std::int64_t j = 0; j < k_terms; ++j) {
        const double jj = static_cast<double>(j);
        c = b_sign * std::exp(log_b - log_d) - c;
        sum += c * cpow_neg(jj + 1.0, s);
        const double ratio = (jj + k) * (jj - k) / ((jj + 0.5) * (jj + 1.0));
        b_sign = ratio < 0 ? -b_sign : b_sign;
        log_b += std::log(std::abs(ratio));
    }

    EvalResult r;
    r.value = require_finite(sum.value(), "eta_accelerated");
    r.terms_used = k_terms;
    r.est_error = std::exp(log_scale - k * kLogEtaRate) + k * kEps;
    r.representation = {RepresentationKind::EtaAccelerated, 1, tol};
    return r;
}

EvalResult zeta_eta(Complex s, double tol) {
    require_tolerance(tol);
    if (!is_finite(s) || !(s.real() > 0.0)) {
        throw DomainError("eta representation requires re(s) > 0");
    }
    const Complex alpha = EtaFactors::at(s).alpha;
    const double alpha_abs = std::abs(alpha);
    if (alpha_abs <= kStripEpsilon) {
        throw NearPoleError("1 - 2^{1-s} vanishes (pole of zeta at s = 1)");
    }
    auto eta = eta_accelerated(s, tol * alpha_abs);
    EvalResult r;
    r.value = require_finite(eta.value / alpha, "zeta_eta");
    r.terms_used = eta.terms_used;
    r.est_error = eta.est_error / alpha_abs + kEps * std::abs(r.value);
    r.representation = {RepresentationKind::EtaAccelerated, 1, tol};
    return r;
}

Complex partial_sum(Complex s, std::int64_t b) {
    CompensatedSum sum;
    for (std::int64_t n = 1; n <= b; ++n) {
        sum += cpow_neg(static_cast<double>(n), s);
    }
    return sum.value();
}

Complex zeta_truncated(const StripPoint& point, std::int64_t b) {
    require_index(b);
    const Complex s = point.value();
    return partial_sum(s, b) - cpow(static_cast<double>(b), 1.0 - s) / (1.0 - s);
}

Complex tail_interval_term(Complex s, std::int64_t n) {
    // s n^{1-s} [phi(1-s) - phi(-s)] with phi(w) = expm1(w L) / w, L = log(1 + 1/n);
    // equal to s [((n+1)^{1-s} - n^{1-s})/(1-s) + (n/s)((n+1)^{-s} - n^{-s})].
    const double nn = static_cast<double>(n);
    const double log_step = std::log1p(1.0 / nn);
    const Complex up = expm1((1.0 - s) * log_step) / (1.0 - s);
    const Complex down = expm1(-s * log_step) / (-s);
    return s * cpow(nn, 1.0 - s) * (up - down);
}

Complex tail_integral(const StripPoint& point, std::int64_t b, double tol, std::int64_t max_intervals) {
    require_index(b);
    require_tolerance(tol);
    return tail_integral_impl(point.value(), b, tol, max_intervals).value;
}

EvalResult zeta_finite_b(const StripPoint& point, std::int64_t b, double tol) {
    require_index(b);
    require_tolerance(tol);
    const Complex s = point.value();
    const auto tail = tail_integral_impl(s, b, 0.5 * tol, kMaxTailIntervals);
    const Complex correction = cpow(static_cast<double>(b), 1.0 - s) / (1.0 - s);
    CompensatedSum sum;
    for (std::int64_t n = 1; n <= b; ++n) {
        sum += cpow_neg(static_cast<double>(n), s);
    }
    sum += -correction;
    sum += -tail.value;

    EvalResult r;
    r.value = require_finite(sum.value(), "zeta_finite_b");
    r.terms_used = b + tail.terms;
    r.est_error = tail.bound + static_cast<double>(r.terms_used) * kEps *
                                   std::max({std::abs(r.value), std::abs(correction), 1.0});
    r.representation = {RepresentationKind::FiniteBExact, b, tol};
    return r;
}

EvalResult evaluate(Complex s, const Representation& rep) {
    switch (rep.kind) {
        case RepresentationKind::DirectSeries:
            return zeta_direct(s, rep.tol);
        case RepresentationKind::EtaAccelerated:
            return zeta_eta(s, rep.tol);
        case RepresentationKind::TruncatedLimit: {
            const StripPoint point(s);
            EvalResult r;
            r.value = zeta_truncated(point, rep.b);
            // |O1(b)| <= |s| b^{-sigma} / sigma since 0 <= x - floor x < 1.
            r.est_error = std::abs(s) * std::pow(static_cast<double>(rep.b), -point.sigma()) / point.sigma();
            r.terms_used = rep.b;
            r.representation = rep;
            return r;
        }
        case RepresentationKind::FiniteBExact:
            return zeta_finite_b(StripPoint(s), rep.b, rep.tol);
    }
    throw DomainError("unknown representation");
}

Complex zeta_reflected(const StripPoint& s, const Representation& rep) {
    return evaluate(s.reflected().value(), rep).value;
}

}  // namespace zetalab
