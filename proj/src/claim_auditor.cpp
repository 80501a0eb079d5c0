#include "zetalab/claim_auditor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zetalab/zeta_reps.hpp"

namespace zetalab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kReferenceTolerance = 1e-14;

Complex difference_term(Complex s, std::int64_t n) {
    const double nn = static_cast<double>(n);
    return cpow_neg(nn, s) - std::conj(cpow_neg(nn, 1.0 - s));
}

void require_index(std::int64_t b) {
    if (b < 1) {
        throw DomainError("b must be >= 1, got " + std::to_string(b));
    }
}

// Gaussian elimination with partial pivoting on a small dense complex system.
std::vector<Complex> solve(std::vector<std::vector<Complex>> a, std::vector<Complex> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
                pivot = row;
            }
        }
        if (a[pivot][col] == Complex{}) {
            throw NumericalError("singular extrapolation system");
        }
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const Complex factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Complex acc = rhs[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            acc -= a[i][k] * x[k];
        }
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace

Complex difference_series(const StripPoint& point, std::int64_t b) {
    require_index(b);
    CompensatedSum sum;
    for (std::int64_t n = 1; n <= b; ++n) {
        sum += difference_term(point.value(), n);
    }
    return sum.value();
}

Complex exponential_expression(const StripPoint& point, std::int64_t b) {
    require_index(b);
    const Complex s = point.value();
    const double bb = static_cast<double>(b);
    // conj(b^s / s) = b^{conj s} / conj s; written this way both terms are computed
    // identically when 1 - s == conj s (sigma = 1/2).
    return cpow(bb, 1.0 - s) / (1.0 - s) - cpow(bb, std::conj(s)) / std::conj(s);
}

double real_criterion(const StripPoint& point, std::int64_t b) {
    require_index(b);
    const double sigma = point.sigma();
    const double t = point.t();
    const double bb = static_cast<double>(b);
    return std::pow(bb, 1.0 - sigma) / std::hypot(1.0 - sigma, t) - std::pow(bb, sigma) / std::hypot(sigma, t);
}

std::vector<std::int64_t> b_schedule(std::int64_t b_max, double growth) {
    if (b_max < 2) {
        throw DomainError("b_max must be >= 2");
    }
    if (!(growth > 1.0) || !std::isfinite(growth)) {
        throw DomainError("growth must be > 1");
    }
    std::vector<std::int64_t> schedule;
    for (int k = 0;; ++k) {
        const double b = std::ceil(std::pow(growth, k));
        if (b > static_cast<double>(b_max)) {
            break;
        }
        const auto bi = static_cast<std::int64_t>(b);
        if (schedule.empty() || bi > schedule.back()) {
            schedule.push_back(bi);
        }
    }
    return schedule;
}

std::vector<Complex> remainder_exponents(Complex s, int order) {
    const Complex slow = 1.0 - std::conj(s);  // (1 - sigma) + i t
    std::vector<Complex> exponents;
    for (int j = 0; static_cast<int>(exponents.size()) < order; ++j) {
        // Slowest-decaying family first.
        const Complex a = (slow.real() <= s.real() ? slow : s) + static_cast<double>(j);
        const Complex b = (slow.real() <= s.real() ? s : slow) + static_cast<double>(j);
        exponents.push_back(a);
        if (static_cast<int>(exponents.size()) < order) {
            exponents.push_back(b);
        }
    }
    return exponents;
}

Complex extrapolate_limit(const std::vector<std::int64_t>& b, const std::vector<Complex>& values,
                          std::vector<Complex> exponents) {
    if (b.size() != values.size() || b.empty()) {
        throw DomainError("extrapolate_limit needs matching, non-empty samples");
    }
    std::vector<Complex> distinct;
    for (const auto& p : exponents) {
        const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                      [&](const Complex& q) { return std::abs(p - q) < 1e-12; });
        if (!seen) {
            distinct.push_back(p);
        }
    }
    const std::size_t m = std::min(distinct.size(), b.size() - 1);
    const std::size_t first = b.size() - (m + 1);
    std::vector<std::vector<Complex>> a(m + 1, std::vector<Complex>(m + 1));
    std::vector<Complex> rhs(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        const double bi = static_cast<double>(b[first + i]);
        a[i][0] = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            a[i][j + 1] = cpow_neg(bi, distinct[j]);
        }
        rhs[i] = values[first + i];
    }
    return solve(std::move(a), std::move(rhs))[0];
}

AuditReport audit(const StripPoint& point, std::int64_t b_max, double growth, int order) {
    const auto schedule = b_schedule(b_max, growth);
    const Complex s = point.value();

    AuditReport report;
    report.s = s;
    report.rows.reserve(schedule.size());
    CompensatedSum sum;
    std::int64_t n = 0;
    for (const auto b : schedule) {
        while (n < b) {
            sum += difference_term(s, ++n);
        }
        AuditRow row;
        row.b = b;
        row.difference = sum.value();
        row.exponential = exponential_expression(point, b);
        row.difference_minus_exponential = row.difference - row.exponential;
        row.criterion = real_criterion(point, b);
        const double bb = static_cast<double>(b);
        row.est_error = kEps * (bb + std::pow(bb, 1.0 - point.sigma()) / std::abs(1.0 - s) +
                                std::pow(bb, point.sigma()) / std::abs(s));
        report.rows.push_back(row);
    }

    std::vector<std::int64_t> bs;
    std::vector<Complex> values;
    for (const auto& row : report.rows) {
        bs.push_back(row.b);
        values.push_back(row.difference_minus_exponential);
    }
    const auto exponents = remainder_exponents(s, order);
    report.limit_estimate = extrapolate_limit(bs, values, exponents);
    if (bs.size() > 2) {
        // Same extrapolation one row earlier; the change estimates the extrapolation error.
        bs.pop_back();
        values.pop_back();
        report.limit_est_error = std::abs(report.limit_estimate - extrapolate_limit(bs, values, exponents));
    } else {
        report.limit_est_error = std::abs(report.limit_estimate - report.rows.back().difference_minus_exponential);
    }

    const auto direct = zeta_eta(s, kReferenceTolerance);
    const auto reflected = zeta_eta(1.0 - s, kReferenceTolerance);
    report.reference = direct.value - std::conj(reflected.value);
    report.reference_est_error = direct.est_error + reflected.est_error;
    report.discrepancy = std::abs(report.limit_estimate - report.reference);
    return report;
}

}  // namespace zetalab
