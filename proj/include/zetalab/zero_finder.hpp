#pragma once

#include <cstddef>
#include <vector>

#include "zetalab/complex_kernel.hpp"

namespace zetalab {

// Axis-aligned rectangle inside the critical strip, traversed counter-clockwise.
struct ContourRectangle {
    double sigma_min = 0.05;
    double sigma_max = 0.95;
    double t_min = 0.0;
    double t_max = 1.0;
    int samples_per_unit = 64;

    // Throws DomainError for an empty rectangle or one leaving the strip.
    void validate() const;
    [[nodiscard]] bool contains(Complex s) const noexcept;
    [[nodiscard]] double height() const noexcept { return t_max - t_min; }
};

struct ZeroFinderOptions {
    double clearance = 1e-3;        // min |zeta| on the sampled boundary
    double perturbation = 0.07;     // t-shift applied to a boundary that fails clearance
    int max_retries = 3;
    int max_samples_per_unit = 4096;
    double capture_threshold = 0.5;  // refine_zero refuses starts with |zeta(s0)| above this
    double localize_height = 0.25;   // single-zero rectangles are halved down to this height
    int max_iterations = 50;
    std::size_t threads = 0;         // 0 = thread_count()
};

struct ZeroCandidate {
    Complex s;
    double residual = 0.0;           // |zeta(s)| through the eta representation
    double residual_finite_b = 0.0;  // |zeta(s)| through the finite-b representation, b = 1
    double location_error = 0.0;     // |zeta(s) / zeta'(s)|, size of the next Newton step
    int iterations = 0;
    ContourRectangle source_rect;
};

// zeta(s) as used by the finder (eta representation, tolerance 1e-14).
[[nodiscard]] Complex finder_zeta(Complex s);

// Number of zeros of zeta inside `rect` by the argument principle. The boundary is sampled
// at rect.samples_per_unit points per unit length; the density is doubled (up to
// options.max_samples_per_unit) while any single step turns the argument by more than pi/2.
// Throws BoundaryTooClose when |zeta| <= options.clearance at a boundary sample and
// StepTooCoarse when the maximum density is still too coarse.
int winding_count(const ContourRectangle& rect, const ZeroFinderOptions& options = {});

// All zeros with t in [t_min, t_max] and sigma in [0.05, 0.95], sorted by t. Unit windows are
// processed concurrently; results do not depend on the schedule.
std::vector<ZeroCandidate> find_zeros(double t_min, double t_max, double tol,
                                      const ZeroFinderOptions& options = {});

// Newton iteration with a central-difference derivative. Throws NoConvergence when
// |zeta(s0)| is above the capture threshold, after max_iterations, or if an iterate leaves
// the strip.
ZeroCandidate refine_zero(Complex s0, double tol, const ZeroFinderOptions& options = {});

}  // namespace zetalab
