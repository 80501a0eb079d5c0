#include "zetalab/zero_finder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zetalab/parallel.hpp"
#include "zetalab/zeta_reps.hpp"

namespace zetalab {

namespace {

constexpr double kEvalTolerance = 1e-14;

std::string describe(const ContourRectangle& r) {
    return "[" + std::to_string(r.sigma_min) + ", " + std::to_string(r.sigma_max) + "] x [" +
           std::to_string(r.t_min) + ", " + std::to_string(r.t_max) + "]";
}

int samples_on(double length, int per_unit) {
    return std::max(2, static_cast<int>(std::ceil(length * per_unit)));
}

// Fixed-density argument-principle count; throws StepTooCoarse instead of adapting.
int winding_at_density(const ContourRectangle& rect, int per_unit, const ZeroFinderOptions& options) {
    const std::array<Complex, 5> corners = {
        Complex(rect.sigma_min, rect.t_min), Complex(rect.sigma_max, rect.t_min),
        Complex(rect.sigma_max, rect.t_max), Complex(rect.sigma_min, rect.t_max),
        Complex(rect.sigma_min, rect.t_min)};

    double total = 0.0;
    Complex previous = finder_zeta(corners[0]);
    for (std::size_t edge = 0; edge + 1 < corners.size(); ++edge) {
        const Complex from = corners[edge];
        const Complex to = corners[edge + 1];
        const int steps = samples_on(std::abs(to - from), per_unit);
        for (int k = 1; k <= steps; ++k) {
            const Complex point = from + (to - from) * (static_cast<double>(k) / steps);
            const Complex value = finder_zeta(point);
            if (std::abs(value) <= options.clearance) {
                throw BoundaryTooClose("|zeta| <= " + std::to_string(options.clearance) + " on boundary of " +
                                       describe(rect));
            }
            const double step = std::arg(value * std::conj(previous));
            if (std::abs(step) > 0.5 * std::numbers::pi) {
                throw StepTooCoarse("argument step exceeds pi/2 on " + describe(rect) + " at " +
                                    std::to_string(per_unit) + " samples per unit");
            }
            total += step;
            previous = value;
        }
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::nearbyint(turns);
    if (std::abs(turns - rounded) > 0.1) {
        throw NumericalError("winding number " + std::to_string(turns) + " is not near an integer on " +
                             describe(rect));
    }
    return static_cast<int>(rounded);
}

// True when |zeta| stays above the clearance along the horizontal segment at height t.
bool line_is_clear(double t, double sigma_min, double sigma_max, const ZeroFinderOptions& options, int per_unit) {
    const int steps = samples_on(sigma_max - sigma_min, per_unit);
    for (int k = 0; k <= steps; ++k) {
        const double sigma = sigma_min + (sigma_max - sigma_min) * k / steps;
        if (std::abs(finder_zeta({sigma, t})) <= options.clearance) {
            return false;
        }
    }
    return true;
}

// t itself, or the first of t + p, t - p, t + 2p, ... (max_retries shifts) whose horizontal
// line is clear and that stays strictly inside (lo, hi).
double clear_line(double t, double lo, double hi, double sigma_min, double sigma_max,
                  const ZeroFinderOptions& options, int per_unit) {
    if (line_is_clear(t, sigma_min, sigma_max, options, per_unit)) {
        return t;
    }
    for (int attempt = 1; attempt <= options.max_retries; ++attempt) {
        const double magnitude = options.perturbation * ((attempt + 1) / 2);
        const double candidate = t + (attempt % 2 == 1 ? magnitude : -magnitude);
        if (candidate > lo && candidate < hi && line_is_clear(candidate, sigma_min, sigma_max, options, per_unit)) {
            return candidate;
        }
    }
    throw BoundaryTooClose("no clear horizontal boundary near t = " + std::to_string(t) + " after " +
                           std::to_string(options.max_retries) + " perturbations");
}

ZeroCandidate localize(const ContourRectangle& rect, double tol, const ZeroFinderOptions& options) {
    constexpr int kGrid = 9;
    Complex best{};
    double best_abs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            const Complex point(rect.sigma_min + (rect.sigma_max - rect.sigma_min) * (i + 0.5) / kGrid,
                                rect.t_min + rect.height() * (j + 0.5) / kGrid);
            const double magnitude = std::abs(finder_zeta(point));
            if (magnitude < best_abs) {
                best_abs = magnitude;
                best = point;
            }
        }
    }
    auto candidate = refine_zero(best, tol, options);
    if (!rect.contains(candidate.s)) {
        throw NoConvergence("refined zero left its bracketing rectangle " + describe(rect));
    }
    candidate.source_rect = rect;
    return candidate;
}

void search(const ContourRectangle& rect, int count, double tol, const ZeroFinderOptions& options,
            std::vector<ZeroCandidate>& out) {
    if (count == 0) {
        return;
    }
    if (count == 1 && rect.height() <= options.localize_height) {
        out.push_back(localize(rect, tol, options));
        return;
    }
    const double middle = 0.5 * (rect.t_min + rect.t_max);
    const double split =
        clear_line(middle, rect.t_min, rect.t_max, rect.sigma_min, rect.sigma_max, options, rect.samples_per_unit);
    ContourRectangle lower = rect;
    ContourRectangle upper = rect;
    lower.t_max = split;
    upper.t_min = split;
    const int lower_count = winding_count(lower, options);
    const int upper_count = winding_count(upper, options);
    if (lower_count + upper_count != count) {
        throw NumericalError("winding counts are not additive on " + describe(rect));
    }
    search(lower, lower_count, tol, options, out);
    search(upper, upper_count, tol, options, out);
}

}  // namespace

void ContourRectangle::validate() const {
    if (!(sigma_min < sigma_max) || !(t_min < t_max)) {
        throw DomainError("contour rectangle is empty");
    }
    if (!StripPoint::contains({sigma_min, t_min}) || !StripPoint::contains({sigma_max, t_max})) {
        throw DomainError("contour rectangle leaves the critical strip");
    }
    if (samples_per_unit < 1) {
        throw DomainError("samples_per_unit must be positive");
    }
}

bool ContourRectangle::contains(Complex s) const noexcept {
    return s.real() >= sigma_min && s.real() <= sigma_max && s.imag() >= t_min && s.imag() <= t_max;
}

Complex finder_zeta(Complex s) { return zeta_eta(s, kEvalTolerance).value; }

int winding_count(const ContourRectangle& rect, const ZeroFinderOptions& options) {
    rect.validate();
    for (int per_unit = rect.samples_per_unit;; per_unit *= 2) {
        try {
            return winding_at_density(rect, per_unit, options);
        } catch (const StepTooCoarse&) {
            if (per_unit * 2 > options.max_samples_per_unit) {
                throw;
            }
        }
    }
}

std::vector<ZeroCandidate> find_zeros(double t_min, double t_max, double tol, const ZeroFinderOptions& options) {
    if (!(t_min > 0.0) || !(t_min < t_max) || !std::isfinite(t_max)) {
        throw DomainError("find_zeros requires 0 < t_min < t_max");
    }
    if (!(tol > 0.0)) {
        throw DomainError("find_zeros requires a positive tolerance");
    }
    const ContourRectangle base{.t_min = t_min, .t_max = t_max};

    std::vector<double> edges{t_min};
    for (double t = t_min + 1.0; t < t_max; t += 1.0) {
        edges.push_back(t);
    }
    edges.push_back(t_max);

    // Shift any window edge that passes too close to a zero. Outer edges may move outward.
    std::vector<double> cleared(edges.size());
    parallel_for(
        edges.size(),
        [&](std::size_t i) {
            const double lo = i == 0 ? 0.0 : edges[i - 1];
            const double hi = i + 1 == edges.size() ? edges[i] + 1.0 : edges[i + 1];
            cleared[i] = clear_line(edges[i], lo, hi, base.sigma_min, base.sigma_max, options, base.samples_per_unit);
        },
        options.threads);

    std::vector<std::vector<ZeroCandidate>> per_window(cleared.size() - 1);
    parallel_for(
        per_window.size(),
        [&](std::size_t i) {
            ContourRectangle window = base;
            window.t_min = cleared[i];
            window.t_max = cleared[i + 1];
            search(window, winding_count(window, options), tol, options, per_window[i]);
        },
        options.threads);

    std::vector<ZeroCandidate> zeros;
    for (auto& window : per_window) {
        zeros.insert(zeros.end(), window.begin(), window.end());
    }
    std::sort(zeros.begin(), zeros.end(), [](const ZeroCandidate& a, const ZeroCandidate& b) {
        return a.s.imag() != b.s.imag() ? a.s.imag() < b.s.imag() : a.s.real() < b.s.real();
    });
    return zeros;
}

ZeroCandidate refine_zero(Complex s0, double tol, const ZeroFinderOptions& options) {
    if (!StripPoint::contains(s0)) {
        throw DomainError("refine_zero start point is outside the strip");
    }
    Complex s = s0;
    Complex value = finder_zeta(s);
    if (std::abs(value) >= options.capture_threshold) {
        throw NoConvergence("|zeta(s0)| = " + std::to_string(std::abs(value)) + " is above the capture threshold");
    }

    auto correction = [](Complex z, Complex fz) {
        const double h = 1e-6 * std::max(1.0, std::abs(z));
        const Complex derivative = (finder_zeta(z + h) - finder_zeta(z - h)) / (2.0 * h);
        if (derivative == Complex{}) {
            throw NoConvergence("vanishing derivative in Newton iteration");
        }
        return fz / derivative;
    };
    auto newton_step = [&](Complex z, Complex fz) { return z - correction(z, fz); };

    int iterations = 0;
    while (std::abs(value) >= tol) {
        if (iterations == options.max_iterations) {
            throw NoConvergence("Newton iteration did not reach |zeta| < " + std::to_string(tol) + " in " +
                                std::to_string(options.max_iterations) + " steps");
        }
        s = newton_step(s, value);
        ++iterations;
        if (!StripPoint::contains(s)) {
            throw NoConvergence("Newton iterate left the critical strip");
        }
        value = finder_zeta(s);
    }
    // One polishing step; kept only if it lowers the residual.
    const Complex polished = newton_step(s, value);
    if (StripPoint::contains(polished)) {
        const Complex polished_value = finder_zeta(polished);
        if (std::abs(polished_value) < std::abs(value)) {
            s = polished;
            value = polished_value;
        }
    }

    ZeroCandidate candidate;
    candidate.s = s;
    candidate.residual = std::abs(value);
    candidate.residual_finite_b = std::abs(zeta_finite_b(StripPoint(s), 1, kEvalTolerance).value);
    candidate.location_error = std::abs(correction(s, value));
    candidate.iterations = iterations;
    candidate.source_rect = {.sigma_min = s.real(), .sigma_max = s.real(), .t_min = s.imag(), .t_max = s.imag()};
    return candidate;
}

}  // namespace zetalab
