#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/complex_kernel.hpp"

namespace zetalab {

// One b-row of the audit table.
struct AuditRow {
    std::int64_t b = 0;
    Complex difference;   // D(b,s) = Sum_{n<=b} (n^{-s} - conj(n^{-(1-s)}))
    Complex exponential;  // E(b,s) = b^{1-s}/(1-s) - conj(b^s/s)
    Complex difference_minus_exponential;
    double criterion = 0.0;  // b^{1-sigma}/|1-s| - b^sigma/|s|
    double est_error = 0.0;  // round-off model for D - E
};

struct AuditReport {
    Complex s;
    std::vector<AuditRow> rows;  // strictly increasing b
    Complex limit_estimate;      // extrapolated lim D - E
    double limit_est_error = 0.0;
    Complex reference;  // zeta(s) - conj(zeta(1-s)) through the eta representation
    double reference_est_error = 0.0;
    double discrepancy = 0.0;  // |limit_estimate - reference|
};

[[nodiscard]] Complex difference_series(const StripPoint& s, std::int64_t b);
[[nodiscard]] Complex exponential_expression(const StripPoint& s, std::int64_t b);
[[nodiscard]] double real_criterion(const StripPoint& s, std::int64_t b);

// b = ceil(growth^k), k = 0, 1, ..., up to b_max, duplicates removed.
[[nodiscard]] std::vector<std::int64_t> b_schedule(std::int64_t b_max, double growth);

// Limit of values[i] ~ L + Sum_j c_j b[i]^{-exponents[j]}, solved exactly from the last
// exponents.size() + 1 samples. Exponents closer than 1e-12 are merged.
[[nodiscard]] Complex extrapolate_limit(const std::vector<std::int64_t>& b, const std::vector<Complex>& values,
                                        std::vector<Complex> exponents);

// Error exponents of D - E: O1(b,s) - conj(O1(b,1-s)) expands in b^{-(s+j)} and
// b^{-(1-conj s+j)}, j = 0, 1, ...; `order` exponents are returned, slowest first.
[[nodiscard]] std::vector<Complex> remainder_exponents(Complex s, int order);

// Tabulates D, E, D - E and the real criterion along b_schedule(b_max, growth) and compares
// the extrapolated limit of D - E with zeta(s) - conj(zeta(1-s)).
AuditReport audit(const StripPoint& s, std::int64_t b_max = 1'000'000, double growth = 2.0, int order = 4);

}  // namespace zetalab
