#include "freight/reference.hpp"

#include <algorithm>
#include <array>

namespace freight::reference {

namespace {

constexpr std::array<PublishedRate, 10> kRates{{
    {Series::volumes, "total", 2003, 2017, -3.09},
    {Series::volumes, "local", 2003, 2017, -1.57},
    {Series::volumes, "import", 2003, 2017, 6.82},
    {Series::volumes, "export", 2003, 2017, 2.45},
    {Series::volumes, "transit", 2003, 2017, -6.26},
    {Series::revenues, "total", 2003, 2017, 1.11},
    {Series::revenues, "local", 2003, 2017, -1.42},
    {Series::revenues, "import", 2003, 2017, 12.28},
    {Series::revenues, "export", 2003, 2017, 6.00},
    {Series::revenues, "transit", 2003, 2017, -0.63},
}};

constexpr std::array<PublishedShare, 12> kShares{{
    {2006, 65.6, 13790, 0.476},
    {2007, 57.5, 16994, 0.338},
    {2008, 54.0, 19075, 0.283},
    {2009, 49.0, 17986, 0.272},
    {2010, 62.9, 20743, 0.303},
    {2011, 71.1, 24344, 0.292},
    {2012, 70.2, 26167, 0.268},
    {2013, 70.1, 26847, 0.261},
    {2014, 71.0, 29150, 0.243},
    {2015, 76.2, 31756, 0.240},
    {2016, 59.0, 34028, 0.173},
    {2017, 55.0, 37847, 0.145},
}};

constexpr std::array<MatrixRow, 15> kTable3{{
    {0.01, 12.41, 0.01, 530161, -59.66, -0.011},
    {0.02, 14.12, 0.01, 530161, -19.68, -0.004},
    {0.03, 15.84, 0.01, 530161, 20.30, 0.004},
    {0.04, 17.55, 0.01, 530161, 60.28, 0.011},
    {0.05, 19.26, 0.01, 530161, 100.26, 0.019},
    {0.06, 20.97, 0.01, 530161, 140.25, 0.026},
    {0.07, 22.68, 0.01, 530161, 180.23, 0.034},
    {0.08, 24.40, 0.01, 530161, 220.21, 0.042},
    {0.09, 26.11, 0.01, 530161, 260.19, 0.049},
    {0.10, 27.82, 0.01, 530161, 300.17, 0.057},
    {0.11, 29.53, 0.01, 530161, 340.15, 0.064},
    {0.12, 31.24, 0.01, 530161, 380.13, 0.072},
    {0.13, 32.96, 0.01, 530161, 420.11, 0.079},
    {0.14, 34.67, 0.01, 530161, 460.09, 0.087},
    {0.15, 36.38, 0.01, 530161, 500.08, 0.094},
}};

} // namespace

std::span<const PublishedRate> conclusion_rates() { return kRates; }

std::optional<double> published_rate_percent(Series series, std::string_view category, int first_year, int last_year) {
    const auto it = std::find_if(kRates.begin(), kRates.end(), [&](const PublishedRate& r) {
        return r.series == series && r.category == category && r.first_year == first_year && r.last_year == last_year;
    });
    if (it == kRates.end())
        return std::nullopt;
    return it->percent;
}

std::span<const PublishedShare> gdp_shares() { return kShares; }

std::optional<double> published_share_percent(const GdpRow& row) {
    const auto it = std::find_if(kShares.begin(), kShares.end(), [&](const PublishedShare& s) {
        return s.year == row.year && s.railway_value_added == row.railway_value_added &&
               s.gdp_market_prices == row.gdp_market_prices;
    });
    if (it == kShares.end())
        return std::nullopt;
    return it->percent;
}

std::span<const MatrixRow> table3() { return kTable3; }

} // namespace freight::reference
