#include "freight/regress.hpp"

#include "freight/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace freight {

OlsFit ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DomainError("regression series differ in length");
    const std::size_t n = x.size();
    if (n < 2)
        throw DomainError("regression needs at least two points");

    const double nd = static_cast<double>(n);
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / nd;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / nd;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (y[i] - mean_y);
    }
    if (!(sxx > 0.0))
        throw DomainError("degenerate design: x values are all identical");

    OlsFit fit;
    fit.n = n;
    const bool constant_y = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (constant_y) {
        fit.slope = 0.0;
        fit.intercept = y[0];
        fit.residuals.assign(n, 0.0);
        fit.r2 = 1.0;
        return fit;
    }

    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double ss_res = 0.0;
    double ss_tot = 0.0;
    fit.residuals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.residuals.push_back(r);
        ss_res += r * r;
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    fit.r2 = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return fit;
}

} // namespace freight
