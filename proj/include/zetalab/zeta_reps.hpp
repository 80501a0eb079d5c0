#pragma once

#include <cstdint>
#include <string_view>

#include "zetalab/complex_kernel.hpp"

namespace zetalab {

inline constexpr double kDefaultTolerance = 1e-12;
// Upper bound on the number of [n, n+1] intervals summed by tail_integral.
inline constexpr std::int64_t kMaxTailIntervals = 100'000'000;

enum class RepresentationKind { DirectSeries, EtaAccelerated, TruncatedLimit, FiniteBExact };

[[nodiscard]] std::string_view to_string(RepresentationKind kind) noexcept;
// Accepts "direct", "eta", "truncated", "finite-b". Throws ParseError otherwise.
[[nodiscard]] RepresentationKind parse_representation(std::string_view name);

struct Representation {
    RepresentationKind kind = RepresentationKind::EtaAccelerated;
    std::int64_t b = 1;  // truncation index, used by TruncatedLimit and FiniteBExact
    double tol = kDefaultTolerance;
};

// alpha = 1 - 2/2^s and beta = 1 - 2/2^{1-s}; zeta(s) = eta(s) / alpha.
struct EtaFactors {
    Complex alpha;
    Complex beta;

    [[nodiscard]] static EtaFactors at(Complex s);
};

struct EvalResult {
    Complex value;
    double est_error = 0.0;  // truncation bound plus a terms * ulp round-off model
    std::int64_t terms_used = 0;
    Representation representation;
};

// Sum_{n<N} n^{-s} plus the integral tail N^{1-s}/(s-1) and Euler-Maclaurin corrections.
// Throws DomainError for re(s) <= 1.
EvalResult zeta_direct(Complex s, double tol = kDefaultTolerance);

// Dirichlet eta Sum (-1)^{n-1} n^{-s} via the Cohen-Rodriguez Villegas-Zagier acceleration
// (error ~ (3+sqrt 8)^{-k} after k terms). Valid for re(s) > 0.
EvalResult eta_accelerated(Complex s, double tol = kDefaultTolerance);

// zeta(s) = eta(s) / (1 - 2^{1-s}). Throws NearPoleError when |1 - 2^{1-s}| <= kStripEpsilon.
EvalResult zeta_eta(Complex s, double tol = kDefaultTolerance);

// Compensated Sum_{n=1}^{b} n^{-s}.
[[nodiscard]] Complex partial_sum(Complex s, std::int64_t b);

// Sum_{n<=b} n^{-s} - b^{1-s}/(1-s). Converges to zeta(s) like |s| b^{-sigma} / sigma.
[[nodiscard]] Complex zeta_truncated(const StripPoint& s, std::int64_t b);

// s * integral_n^{n+1} (x - n) / x^{s+1} dx in closed form.
[[nodiscard]] Complex tail_interval_term(Complex s, std::int64_t n);

// O1 = s * integral_b^inf (x - floor x) / x^{s+1} dx. Throws ToleranceUnreachable when
// more than `max_intervals` intervals would be needed.
Complex tail_integral(const StripPoint& s, std::int64_t b, double tol = kDefaultTolerance,
                      std::int64_t max_intervals = kMaxTailIntervals);

// Sum_{n<=b} n^{-s} - b^{1-s}/(1-s) - O1(b); the value does not depend on b.
EvalResult zeta_finite_b(const StripPoint& s, std::int64_t b, double tol = kDefaultTolerance);

// Evaluates `rep` at the point s. Checks the domain each representation requires.
EvalResult evaluate(Complex s, const Representation& rep);

// zeta(1 - s) through the chosen representation.
Complex zeta_reflected(const StripPoint& s, const Representation& rep);

}  // namespace zetalab
