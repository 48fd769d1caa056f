#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace freight {

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t n = 0;
    std::vector<double> residuals; // y - (intercept + slope * x)
};

/// Simple least-squares line y = intercept + slope * x.
///
/// Throws DomainError when the lengths differ, n < 2 or x has zero variance.
/// For constant y the fit is slope 0, intercept y[0] and r2 = 1 (every
/// residual is zero); otherwise r2 = 1 - SS_res / SS_tot clamped to [0, 1].
OlsFit ols_fit(std::span<const double> x, std::span<const double> y);

} // namespace freight
