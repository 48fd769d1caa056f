#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace freight {

enum class Series { volumes, revenues };

std::string_view to_string(Series s);

/// One labelled row of a freight table: a value for every dataset year.
struct CategorySeries {
    std::string name;
    std::vector<double> values;

    bool operator==(const CategorySeries&) const = default;
};

struct DatasetMetadata {
    std::string volume_units = "thousand tons";
    std::string revenue_units = "thousand GEL";
    std::string source;

    bool operator==(const DatasetMetadata&) const = default;
};

/// Year-indexed freight volumes and revenues by category.
///
/// Construction enforces the table invariants: consecutive strictly increasing
/// years, one value per year for every category, unique category names within
/// a series, and non-negative values. Instances are immutable.
class FreightDataset {
public:
    FreightDataset(std::vector<int> years, std::vector<CategorySeries> volumes,
                   std::vector<CategorySeries> revenues, DatasetMetadata metadata = {});

    const std::vector<int>& years() const { return years_; }
    const std::vector<CategorySeries>& series(Series s) const {
        return s == Series::volumes ? volumes_ : revenues_;
    }
    const std::vector<CategorySeries>& volumes() const { return volumes_; }
    const std::vector<CategorySeries>& revenues() const { return revenues_; }
    const DatasetMetadata& metadata() const { return metadata_; }

    /// nullptr when the category is absent.
    const CategorySeries* find(Series s, std::string_view category) const;

    /// Throws std::out_of_range for an unknown category or year.
    double value(Series s, std::string_view category, int year) const;

    bool operator==(const FreightDataset&) const = default;

private:
    std::vector<int> years_;
    std::vector<CategorySeries> volumes_;
    std::vector<CategorySeries> revenues_;
    DatasetMetadata metadata_;
};

struct GdpRow {
    int year = 0;
    double railway_value_added = 0.0; // million GEL
    double gdp_market_prices = 0.0;   // million GEL

    bool operator==(const GdpRow&) const = default;
};

/// Railway value added against GDP at market prices, one row per year.
class GdpSeries {
public:
    explicit GdpSeries(std::vector<GdpRow> rows, std::string source = {});

    const std::vector<GdpRow>& rows() const { return rows_; }
    const std::string& source() const { return source_; }

    bool operator==(const GdpSeries&) const = default;

private:
    std::vector<GdpRow> rows_;
    std::string source_;
};

enum class Severity { warning, error };

std::string_view to_string(Severity s);

struct Finding {
    int year = 0;
    std::string check;
    double expected = 0.0;
    double actual = 0.0;
    double discrepancy = 0.0; // |expected - actual|
    Severity severity = Severity::warning;
};

struct ValidationReport {
    double tolerance = 0.0;
    std::vector<Finding> findings;

    bool empty() const { return findings.empty(); }
};

/// Row labels:  "<category>" or "volume:<category>" for volumes,
/// "revenue:<category>" for revenues. The header row is
/// "category,<year>,<year>,..." and '#' lines carry metadata.
/// Throws ParseError for non-numeric cells and StructuralError for duplicate
/// categories or years, gaps and missing cells.
FreightDataset parse_freight_table(std::string_view text, char delimiter = ',');

/// Lossless: parse_freight_table(serialize_freight_table(ds)) == ds.
std::string serialize_freight_table(const FreightDataset& ds, char delimiter = ',');

/// Rows "year,railway_value_added,gdp_market_prices"; the header row is optional.
/// Zero or negative GDP is a ValidationError.
GdpSeries parse_gdp_table(std::string_view text, char delimiter = ',');

std::string serialize_gdp_table(const GdpSeries& gs, char delimiter = ',');

/// Checks local + import + export + transit against total for both series.
/// A finding is emitted for every (year, series) whose discrepancy exceeds
/// tolerance. Series lacking any of the five categories are skipped.
ValidationReport validate_components(const FreightDataset& ds, double tolerance = 0.5);

namespace categories {
inline constexpr std::string_view total = "total";
inline constexpr std::string_view local = "local";
inline constexpr std::string_view import_ = "import";
inline constexpr std::string_view export_ = "export";
inline constexpr std::string_view transit = "transit";
} // namespace categories

/// Human-readable name for the bundled category slugs; returns the slug otherwise.
std::string_view display_name(std::string_view category);

std::string read_file(const std::string& path);

} // namespace freight
