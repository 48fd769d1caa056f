#pragma once

#include "freight/data_model.hpp"

#include <optional>
#include <span>
#include <string_view>

// Published reference figures for the Georgian Railway study: GDP shares
// 2006-2017, category growth rates 2003-2017 and the 15-row growth scenario
// matrix. Used for report annotations, golden tests and calibration targets.
namespace freight::reference {

struct PublishedRate {
    Series series;
    std::string_view category;
    int first_year;
    int last_year;
    double percent; // as printed, two decimals
};

std::span<const PublishedRate> conclusion_rates();

std::optional<double> published_rate_percent(Series series, std::string_view category, int first_year, int last_year);

struct PublishedShare {
    int year;
    double railway_value_added; // million GEL
    double gdp_market_prices;   // million GEL
    double percent;             // as printed, three decimals
};

std::span<const PublishedShare> gdp_shares();

/// Only rows whose year and inputs match the published row are annotated.
std::optional<double> published_share_percent(const GdpRow& row);

struct MatrixRow {
    double growth;          // per-year freight growth rate
    double volume;          // freight volume after the horizon, million tons
    double cost_adjustment; // per-period cost reduction
    double gdp_pv;          // million GEL
    double effect_pv;       // million USD
    double share_percent;   // as printed, three decimals
};

std::span<const MatrixRow> table3();

inline constexpr double table3_gdp_pv = 530161.0;
inline constexpr double gdp_2017 = 37847.0;
inline constexpr double gdp_growth = 0.04;
inline constexpr int horizon_years = 16;
inline constexpr double tariff_usd_per_ton = 10.0;
inline constexpr double cost_adjustment = 0.01;
/// Effective base volume (million tons) implied by the matrix volume column.
inline constexpr double matrix_base_volume = 10.698;
/// Actual 2017 freight volume, million tons.
inline constexpr double volume_2017 = 10.6726;

} // namespace freight::reference
