#include "freight/data_model.hpp"

#include "freight/csv.hpp"
#include "freight/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace freight {

std::string_view to_string(Series s) {
    return s == Series::volumes ? "volumes" : "revenues";
}

std::string_view to_string(Severity s) {
    return s == Severity::warning ? "warning" : "error";
}

namespace {

void check_series(const std::vector<CategorySeries>& series, std::size_t year_count, Series which) {
    std::set<std::string_view> seen;
    for (const auto& c : series) {
        if (c.name.empty())
            throw StructuralError("empty category label in " + std::string(to_string(which)));
        if (!seen.insert(c.name).second)
            throw StructuralError("duplicate category '" + c.name + "' in " + std::string(to_string(which)));
        if (c.values.size() != year_count)
            throw StructuralError("category '" + c.name + "' has " + std::to_string(c.values.size()) +
                                  " values for " + std::to_string(year_count) + " years");
        for (double v : c.values) {
            if (!std::isfinite(v) || v < 0.0)
                throw ValidationError("category '" + c.name + "' has a negative or non-finite value");
        }
    }
}

std::map<std::string, std::string> parse_metadata_line(std::string_view line) {
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        auto end = line.find(';', pos);
        if (end == std::string_view::npos)
            end = line.size();
        const auto item = csv::trim(line.substr(pos, end - pos));
        const auto eq = item.find('=');
        if (eq != std::string_view::npos)
            kv.emplace(std::string(csv::trim(item.substr(0, eq))), std::string(csv::trim(item.substr(eq + 1))));
        pos = end + 1;
    }
    return kv;
}

int parse_year(std::string_view cell, std::size_t line, std::size_t column) {
    const double v = csv::parse_number(cell, line, column);
    if (v != std::floor(v) || v < -100000 || v > 100000)
        throw ParseError("year '" + std::string(cell) + "' is not an integer", line, column);
    return static_cast<int>(v);
}

const std::map<std::string_view, std::string_view>& display_names() {
    static const std::map<std::string_view, std::string_view> names{
        {"total", "Total"},
        {"local", "Local"},
        {"import", "Import"},
        {"export", "Export"},
        {"transit", "Transit"},
        {"oil_products", "Oil and related products"},
        {"crude_oil", "Crude oil"},
        {"dry_goods", "Dry goods"},
        {"aluminum_oxide", "Aluminum oxide"},
        {"boxit", "Boxit"},
        {"black_metal", "Black metal"},
        {"black_metal_scrap", "Black metal scrap"},
        {"industrial_raw_materials", "Industrial raw materials"},
        {"construction_materials", "Construction materials"},
        {"wheat", "Wheat and wheat products"},
        {"sugar", "Sugar"},
    };
    return names;
}

} // namespace

std::string_view display_name(std::string_view category) {
    const auto& names = display_names();
    const auto it = names.find(category);
    return it == names.end() ? category : it->second;
}

FreightDataset::FreightDataset(std::vector<int> years, std::vector<CategorySeries> volumes,
                               std::vector<CategorySeries> revenues, DatasetMetadata metadata)
    : years_(std::move(years)), volumes_(std::move(volumes)), revenues_(std::move(revenues)),
      metadata_(std::move(metadata)) {
    if (years_.empty())
        throw StructuralError("dataset has no years");
    for (std::size_t i = 1; i < years_.size(); ++i) {
        if (years_[i] == years_[i - 1])
            throw StructuralError("duplicate year " + std::to_string(years_[i]));
        if (years_[i] != years_[i - 1] + 1)
            throw StructuralError("years must be consecutive and increasing; found " + std::to_string(years_[i - 1]) +
                                  " followed by " + std::to_string(years_[i]));
    }
    if (volumes_.empty() && revenues_.empty())
        throw StructuralError("dataset has no categories");
    check_series(volumes_, years_.size(), Series::volumes);
    check_series(revenues_, years_.size(), Series::revenues);
}

const CategorySeries* FreightDataset::find(Series s, std::string_view category) const {
    const auto& list = series(s);
    const auto it = std::find_if(list.begin(), list.end(), [&](const CategorySeries& c) { return c.name == category; });
    return it == list.end() ? nullptr : &*it;
}

double FreightDataset::value(Series s, std::string_view category, int year) const {
    const auto* c = find(s, category);
    if (!c)
        throw std::out_of_range("unknown category '" + std::string(category) + "'");
    if (year < years_.front() || year > years_.back())
        throw std::out_of_range("year " + std::to_string(year) + " outside dataset");
    return c->values[static_cast<std::size_t>(year - years_.front())];
}

FreightDataset parse_freight_table(std::string_view text, char delimiter) {
    const auto records = csv::read_records(text, delimiter);
    if (records.empty())
        throw StructuralError("freight table has no header row");

    DatasetMetadata meta;
    const auto comments = csv::read_comments(text);
    if (!comments.empty()) {
        const auto kv = parse_metadata_line(comments.front());
        if (auto it = kv.find("volume_units"); it != kv.end())
            meta.volume_units = it->second;
        if (auto it = kv.find("revenue_units"); it != kv.end())
            meta.revenue_units = it->second;
        if (auto it = kv.find("source"); it != kv.end())
            meta.source = it->second;
    }

    const auto& header = records.front();
    if (header.cells.size() < 2)
        throw StructuralError("freight header needs a label column and at least one year");
    std::vector<int> years;
    for (std::size_t c = 1; c < header.cells.size(); ++c)
        years.push_back(parse_year(header.cells[c], header.line, c + 1));

    std::vector<CategorySeries> volumes;
    std::vector<CategorySeries> revenues;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        std::string label = rec.cells.front();
        auto* target = &volumes;
        if (label.rfind("revenue:", 0) == 0) {
            target = &revenues;
            label.erase(0, 8);
        } else if (label.rfind("volume:", 0) == 0) {
            label.erase(0, 7);
        }
        if (label.empty())
            throw ParseError("empty category label", rec.line, 1);
        if (rec.cells.size() > header.cells.size())
            throw StructuralError("row '" + rec.cells.front() + "' at line " + std::to_string(rec.line) +
                                  " has more cells than the header");
        CategorySeries cs{label, {}};
        cs.values.reserve(years.size());
        for (std::size_t c = 1; c < header.cells.size(); ++c) {
            if (c >= rec.cells.size())
                throw StructuralError("missing cell for year " + std::to_string(years[c - 1]) + " in row '" +
                                      rec.cells.front() + "' (line " + std::to_string(rec.line) + ")");
            cs.values.push_back(csv::parse_number(rec.cells[c], rec.line, c + 1));
        }
        target->push_back(std::move(cs));
    }
    return FreightDataset(std::move(years), std::move(volumes), std::move(revenues), std::move(meta));
}

std::string serialize_freight_table(const FreightDataset& ds, char delimiter) {
    std::ostringstream out;
    out << "# volume_units=" << ds.metadata().volume_units << "; revenue_units=" << ds.metadata().revenue_units;
    if (!ds.metadata().source.empty())
        out << "; source=" << ds.metadata().source;
    out << '\n';

    std::vector<std::string> cells{"category"};
    for (int y : ds.years())
        cells.push_back(std::to_string(y));
    out << csv::join(cells, delimiter) << '\n';

    auto emit = [&](const CategorySeries& c, std::string_view prefix) {
        std::vector<std::string> row{std::string(prefix) + c.name};
        for (double v : c.values)
            row.push_back(csv::format_shortest(v));
        out << csv::join(row, delimiter) << '\n';
    };
    for (const auto& c : ds.volumes())
        emit(c, "");
    for (const auto& c : ds.revenues())
        emit(c, "revenue:");
    return out.str();
}

GdpSeries::GdpSeries(std::vector<GdpRow> rows, std::string source)
    : rows_(std::move(rows)), source_(std::move(source)) {
    if (rows_.empty())
        throw StructuralError("GDP series has no rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        if (i > 0 && r.year == rows_[i - 1].year)
            throw StructuralError("duplicate year " + std::to_string(r.year));
        if (i > 0 && r.year < rows_[i - 1].year)
            throw StructuralError("years must be strictly increasing; found " + std::to_string(rows_[i - 1].year) +
                                  " followed by " + std::to_string(r.year));
        if (!std::isfinite(r.gdp_market_prices) || r.gdp_market_prices <= 0.0)
            throw ValidationError("GDP at market prices must be positive (year " + std::to_string(r.year) + ")");
        if (!std::isfinite(r.railway_value_added) || r.railway_value_added < 0.0)
            throw ValidationError("railway value added must be non-negative (year " + std::to_string(r.year) + ")");
    }
}

GdpSeries parse_gdp_table(std::string_view text, char delimiter) {
    const auto records = csv::read_records(text, delimiter);
    std::string source;
    const auto comments = csv::read_comments(text);
    if (!comments.empty()) {
        const auto kv = parse_metadata_line(comments.front());
        if (auto it = kv.find("source"); it != kv.end())
            source = it->second;
    }

    std::vector<GdpRow> rows;
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (r == 0 && !csv::try_parse_number(rec.cells.front()))
            continue; // header
        if (rec.cells.size() > 3)
            throw StructuralError("line " + std::to_string(rec.line) + " has more than three cells");
        for (std::size_t c = 0; c < 3; ++c) {
            if (c >= rec.cells.size() || csv::trim(rec.cells[c]).empty())
                throw StructuralError("missing cell at line " + std::to_string(rec.line) + ", column " +
                                      std::to_string(c + 1));
        }
        rows.push_back({parse_year(rec.cells[0], rec.line, 1), csv::parse_number(rec.cells[1], rec.line, 2),
                        csv::parse_number(rec.cells[2], rec.line, 3)});
    }
    return GdpSeries(std::move(rows), std::move(source));
}

std::string serialize_gdp_table(const GdpSeries& gs, char delimiter) {
    std::ostringstream out;
    out << "# units=million GEL";
    if (!gs.source().empty())
        out << "; source=" << gs.source();
    out << '\n';
    out << csv::join({"year", "railway_value_added", "gdp_market_prices"}, delimiter) << '\n';
    for (const auto& r : gs.rows())
        out << csv::join({std::to_string(r.year), csv::format_shortest(r.railway_value_added),
                          csv::format_shortest(r.gdp_market_prices)},
                         delimiter)
            << '\n';
    return out.str();
}

ValidationReport validate_components(const FreightDataset& ds, double tolerance) {
    if (!(tolerance > 0.0))
        throw DomainError("validation tolerance must be positive");
    ValidationReport report{tolerance, {}};

    constexpr std::array components{categories::local, categories::import_, categories::export_, categories::transit};
    for (Series s : {Series::volumes, Series::revenues}) {
        const auto* total = ds.find(s, categories::total);
        std::array<const CategorySeries*, 4> parts{};
        bool complete = total != nullptr;
        for (std::size_t i = 0; i < components.size(); ++i) {
            parts[i] = ds.find(s, components[i]);
            complete = complete && parts[i] != nullptr;
        }
        if (!complete)
            continue;
        for (std::size_t y = 0; y < ds.years().size(); ++y) {
            double sum = 0.0;
            for (const auto* p : parts)
                sum += p->values[y];
            const double expected = total->values[y];
            const double discrepancy = std::abs(expected - sum);
            if (discrepancy > tolerance)
                report.findings.push_back({ds.years()[y], std::string(to_string(s)) + ".components_sum", expected, sum,
                                           discrepancy, Severity::warning});
        }
    }
    return report;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace freight
