#pragma once

#include "freight/data_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freight {

/// Constant per-period growth taking begin_value to end_value in `periods` steps.
struct CagrResult {
    double begin_value = 0.0;
    double end_value = 0.0;
    int periods = 0;
    double rate = 0.0; // 0.0682 == 6.82% per period
};

/// rate = (end / begin)^(1 / periods) - 1.
/// Throws DomainError for non-positive endpoints or periods < 1.
CagrResult cagr(double begin, double end, int periods);

struct CagrRow {
    Series series = Series::volumes;
    std::string category;
    double begin_value = 0.0;
    double end_value = 0.0;
    int periods = 0;
    std::optional<double> rate;           // absent when undefined
    std::string undefined_reason;         // set when rate is absent
    std::optional<double> published_percent;
    std::string note;                     // set when the computed figure disagrees with the published one
};

struct CagrReport {
    int first_year = 0;
    int last_year = 0;
    std::vector<CagrRow> rows; // volumes first, then revenues, in dataset declaration order
};

/// Growth from the first to the last dataset year for every category of both
/// series; periods = last_year - first_year. Zero endpoints yield undefined
/// rows instead of failing the report. Throws DomainError for datasets that
/// span fewer than two years.
CagrReport cagr_report(const FreightDataset& ds);

struct ShareRow {
    int year = 0;
    double railway_value_added = 0.0; // million GEL
    double gdp = 0.0;                 // million GEL
    double share = 0.0;               // railway_value_added / gdp
};

std::vector<ShareRow> gdp_share_table(const GdpSeries& gs);

} // namespace freight
