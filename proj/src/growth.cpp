#include "freight/growth.hpp"

#include "freight/errors.hpp"
#include "freight/format.hpp"
#include "freight/reference.hpp"

#include <cmath>

namespace freight {

CagrResult cagr(double begin, double end, int periods) {
    if (!(begin > 0.0) || !std::isfinite(begin))
        throw DomainError("CAGR needs a positive beginning value");
    if (!(end > 0.0) || !std::isfinite(end))
        throw DomainError("CAGR needs a positive ending value");
    if (periods < 1)
        throw DomainError("CAGR needs at least one period");
    // expm1/log keeps small rates accurate and gives exactly 0 for end == begin.
    const double rate = std::expm1(std::log(end / begin) / periods);
    return {begin, end, periods, rate};
}

CagrReport cagr_report(const FreightDataset& ds) {
    const auto& years = ds.years();
    if (years.size() < 2)
        throw DomainError("growth report needs at least two years of data");
    CagrReport report{years.front(), years.back(), {}};
    const int periods = years.back() - years.front();

    for (Series s : {Series::volumes, Series::revenues}) {
        for (const auto& c : ds.series(s)) {
            CagrRow row;
            row.series = s;
            row.category = c.name;
            row.begin_value = c.values.front();
            row.end_value = c.values.back();
            row.periods = periods;
            if (row.begin_value <= 0.0 || row.end_value <= 0.0) {
                row.undefined_reason = row.end_value <= 0.0 ? "ending value is zero" : "beginning value is zero";
                if (row.begin_value <= 0.0 && row.end_value <= 0.0)
                    row.undefined_reason = "both endpoints are zero";
            } else {
                row.rate = cagr(row.begin_value, row.end_value, periods).rate;
            }
            row.published_percent =
                reference::published_rate_percent(s, c.name, report.first_year, report.last_year);
            if (row.published_percent && row.rate) {
                const double computed = fmtx::rounded(*row.rate * 100.0, 2);
                if (computed != fmtx::rounded(*row.published_percent, 2))
                    row.note = "published figure is " + fmtx::fixed(*row.published_percent, 2) +
                               "%; table endpoints give " + fmtx::fixed(computed, 2) + "%";
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::vector<ShareRow> gdp_share_table(const GdpSeries& gs) {
    std::vector<ShareRow> out;
    out.reserve(gs.rows().size());
    for (const auto& r : gs.rows())
        out.push_back({r.year, r.railway_value_added, r.gdp_market_prices, r.railway_value_added / r.gdp_market_prices});
    return out;
}

} // namespace freight
