#include "freight/report.hpp"

#include "freight/csv.hpp"
#include "freight/errors.hpp"
#include "freight/format.hpp"
#include "freight/reference.hpp"

#include <json.hpp>

#include <array>
#include <cstdlib>
#include <sstream>

namespace freight {

std::string_view to_string(Format f) {
    switch (f) {
    case Format::csv:
        return "csv";
    case Format::markdown:
        return "markdown";
    case Format::json:
        return "json";
    }
    return "markdown";
}

Format parse_format(std::string_view s) {
    if (s == "csv")
        return Format::csv;
    if (s == "markdown" || s == "md")
        return Format::markdown;
    if (s == "json")
        return Format::json;
    throw InputError("unknown format '" + std::string(s) + "' (expected csv, markdown or json)");
}

Cell Cell::text(std::string s) {
    Cell c;
    c.display = s;
    c.machine = std::move(s);
    c.kind = Kind::text;
    return c;
}

Cell Cell::number(std::string display, std::string machine) {
    return Cell{std::move(display), std::move(machine), Kind::number};
}

Cell Cell::null(std::string display) {
    return Cell{std::move(display), "", Kind::null};
}

namespace {

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += "\\|";
        else
            out.push_back(c);
    }
    return out;
}

std::string render_markdown(const Report& r, const RunManifest& m) {
    std::ostringstream out;
    out << "## " << r.title << "\n\n";
    out << "|";
    for (const auto& c : r.columns)
        out << ' ' << md_escape(c) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        out << "---|";
    out << '\n';
    for (const auto& row : r.rows) {
        out << "|";
        for (const auto& cell : row)
            out << ' ' << md_escape(cell.display) << " |";
        out << '\n';
    }
    if (r.rows.empty())
        out << "\n_No rows._\n";
    if (!r.notes.empty()) {
        out << '\n';
        for (const auto& n : r.notes)
            out << "- " << n << '\n';
    }
    out << "\nRun manifest:\n\n```\n";
    out << "subcommand = " << m.subcommand << '\n';
    out << "version = " << m.version << '\n';
    out << "format = " << m.format << '\n';
    for (const auto& [k, v] : m.config)
        out << "config." << k << " = " << v << '\n';
    for (const auto& [path, digest] : m.inputs)
        out << "input." << path << " = sha256:" << digest << '\n';
    out << "```\n";
    return out.str();
}

std::string render_csv(const Report& r, const RunManifest& m) {
    std::ostringstream out;
    out << "# report: " << r.title << '\n';
    out << "# subcommand = " << m.subcommand << '\n';
    out << "# version = " << m.version << '\n';
    out << "# format = " << m.format << '\n';
    for (const auto& [k, v] : m.config)
        out << "# config." << k << " = " << v << '\n';
    for (const auto& [path, digest] : m.inputs)
        out << "# input." << path << " = sha256:" << digest << '\n';
    for (const auto& n : r.notes)
        out << "# note: " << n << '\n';
    out << csv::join(r.columns) << '\n';
    for (const auto& row : r.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (const auto& c : row)
            cells.push_back(c.machine);
        out << csv::join(cells) << '\n';
    }
    return out.str();
}

std::string render_json(const Report& r, const RunManifest& m) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["title"] = r.title;
    doc["columns"] = r.columns;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i) {
            const auto& c = row[i];
            switch (c.kind) {
            case Cell::Kind::number:
                obj[r.columns[i]] = std::strtod(c.machine.c_str(), nullptr);
                break;
            case Cell::Kind::text:
                obj[r.columns[i]] = c.machine;
                break;
            case Cell::Kind::null:
                obj[r.columns[i]] = nullptr;
                break;
            }
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["notes"] = r.notes;
    json manifest;
    manifest["subcommand"] = m.subcommand;
    manifest["version"] = m.version;
    manifest["format"] = m.format;
    manifest["config"] = json::object();
    for (const auto& [k, v] : m.config)
        manifest["config"][k] = v;
    manifest["inputs"] = json::object();
    for (const auto& [path, digest] : m.inputs)
        manifest["inputs"][path] = "sha256:" + digest;
    doc["manifest"] = std::move(manifest);
    return doc.dump(2) + "\n";
}

// Number cell whose display and machine forms share one rounding.
Cell fixed_cell(double v, int decimals) {
    const auto s = fmtx::fixed(v, decimals);
    return Cell::number(s, s);
}

Cell percent_cell(double fraction, int percent_decimals) {
    const double pct = fmtx::rounded(fraction * 100.0, percent_decimals);
    return Cell::number(fmtx::fixed(pct, percent_decimals) + "%",
                        fmtx::compact(pct / 100.0, percent_decimals + 2));
}

Cell shortest_cell(double v) {
    const auto s = csv::format_shortest(v);
    return Cell::number(s, s);
}

} // namespace

std::string render(const Report& report, const RunManifest& manifest, Format format) {
    switch (format) {
    case Format::csv:
        return render_csv(report, manifest);
    case Format::json:
        return render_json(report, manifest);
    case Format::markdown:
        break;
    }
    return render_markdown(report, manifest);
}

std::vector<std::string> matrix_columns(int horizon) {
    return {"Growth in Freight Transportation (CAGR %)",
            "The total volume of transportation after " + std::to_string(horizon) + " years",
            "Cost adjustment %",
            "GDP in current prices, mln. Gel",
            "The current value of the effect balance",
            "The economic share of railway in GDP"};
}

std::optional<std::size_t> matrix_column_alias(std::string_view selector) {
    static constexpr std::array<std::string_view, 6> aliases{"g", "volume", "cost_adjustment", "gdp_pv", "effect",
                                                             "share"};
    for (std::size_t i = 0; i < aliases.size(); ++i)
        if (aliases[i] == selector)
            return i;
    return std::nullopt;
}

Report cagr_table(const CagrReport& report) {
    Report r;
    r.title = "Compound annual growth by category, " + std::to_string(report.first_year) + "-" +
              std::to_string(report.last_year);
    r.columns = {"Series", "Category", "Begin", "End", "Periods", "CAGR %", "Published %", "Note"};
    for (const auto& row : report.rows) {
        std::vector<Cell> cells;
        cells.push_back(Cell::text(std::string(to_string(row.series))));
        cells.push_back(Cell::text(std::string(display_name(row.category))));
        cells.push_back(shortest_cell(row.begin_value));
        cells.push_back(shortest_cell(row.end_value));
        cells.push_back(Cell::number(std::to_string(row.periods), std::to_string(row.periods)));
        if (row.rate)
            cells.push_back(percent_cell(*row.rate, 2));
        else
            cells.push_back(Cell::null("undefined"));
        if (row.published_percent)
            cells.push_back(percent_cell(*row.published_percent / 100.0, 2));
        else
            cells.push_back(Cell::null(""));
        std::string note = row.rate ? row.note : "undefined: " + row.undefined_reason;
        cells.push_back(Cell::text(note));
        r.rows.push_back(std::move(cells));
    }
    r.notes.push_back("periods = last year - first year = " + std::to_string(report.last_year - report.first_year) +
                      " compounding steps");
    r.notes.push_back("rates shown at two decimals of percent; machine-readable values are fractions");
    return r;
}

Report share_table(const std::vector<ShareRow>& rows, const GdpSeries& source) {
    Report r;
    r.title = "Railway share of GDP at market prices";
    r.columns = {"Year", "Railway Transport", "GDP market prices", "% in GDP", "Note"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        std::vector<Cell> cells;
        cells.push_back(Cell::number(std::to_string(row.year), std::to_string(row.year)));
        cells.push_back(fixed_cell(row.railway_value_added, 1));
        cells.push_back(Cell::number(fmtx::grouped(row.gdp, 0), fmtx::fixed(row.gdp, 0)));
        cells.push_back(percent_cell(row.share, 3));
        std::string note;
        if (const auto published = reference::published_share_percent(source.rows()[i])) {
            const double computed = fmtx::rounded(row.share * 100.0, 3);
            if (computed != fmtx::rounded(*published, 3))
                note = "published figure is " + fmtx::fixed(*published, 3) + "%; " +
                       fmtx::compact(row.railway_value_added, 6) + " / " + fmtx::compact(row.gdp, 6) + " gives " +
                       fmtx::fixed(row.share * 100.0, 5) + "%";
        }
        cells.push_back(Cell::text(note));
        r.rows.push_back(std::move(cells));
    }
    r.notes.push_back("values in million GEL; share = railway value added / GDP, shown at three decimals of percent");
    return r;
}

Report validation_table(const ValidationReport& report) {
    Report r;
    r.title = "Component-sum validation (local + import + export + transit vs total)";
    r.columns = {"Year", "Check", "Expected", "Actual", "Discrepancy", "Severity"};
    for (const auto& f : report.findings) {
        r.rows.push_back({Cell::number(std::to_string(f.year), std::to_string(f.year)), Cell::text(f.check),
                          fixed_cell(f.expected, 1), fixed_cell(f.actual, 1), fixed_cell(f.discrepancy, 1),
                          Cell::text(std::string(to_string(f.severity)))});
    }
    r.notes.push_back("tolerance = " + fmtx::compact(report.tolerance, 6) + " (thousand tons for volumes, thousand GEL "
                      "for revenues)");
    r.notes.push_back(std::to_string(report.findings.size()) + " finding(s); published inconsistencies are reported as "
                      "warnings and never rejected");
    return r;
}

Report matrix_table(const std::vector<ScenarioRow>& rows, const ScenarioConfig& cfg, RenderOptions options) {
    Report r;
    r.title = "Matrix (Results)";
    r.columns = matrix_columns(cfg.horizon);
    for (const auto& row : rows) {
        std::vector<Cell> cells;
        cells.push_back(Cell::number(fmtx::percent_compact(row.g, 4), fmtx::compact(row.g, 6)));
        cells.push_back(fixed_cell(row.volume_h, 2));
        cells.push_back(Cell::number(fmtx::percent_compact(row.cost_adjustment, 4), fmtx::compact(row.cost_adjustment, 6)));
        cells.push_back(Cell::number(fmtx::dollars(row.gdp_pv, 0, false), fmtx::fixed(row.gdp_pv, 0)));
        const double effect = fmtx::rounded(row.effect_pv, 2);
        cells.push_back(
            Cell::number(fmtx::dollars(effect, 2, options.parenthesize_negative), fmtx::fixed(effect, 2)));
        cells.push_back(percent_cell(row.share, 3));
        r.rows.push_back(std::move(cells));
    }

    if (cfg.mode == GrowthMode::simple)
        r.notes.push_back("growth mode simple: volume_t = v0 * (1 + g * t); the growth column is labelled CAGR but "
                          "the published volume column grows linearly in g");
    else
        r.notes.push_back("growth mode compound: volume_t = v0 * (1 + g)^t");
    r.notes.push_back("v0 = " + fmtx::compact(cfg.v0, 6) + " million tons; horizon = " + std::to_string(cfg.horizon) +
                      " years; GDP0 = " + fmtx::compact(cfg.gdp.gdp0, 6) + " mln GEL growing " +
                      fmtx::percent_compact(cfg.gdp.growth, 4) + " a year, discounted at " +
                      fmtx::compact(cfg.gdp.discount, 10));
    std::visit(
        [&](const auto& engine) {
            using T = std::decay_t<decltype(engine)>;
            if constexpr (std::is_same_v<T, ReducedForm>)
                r.notes.push_back("effect engine reduced: effect = a + b * g with a = " + csv::format_shortest(engine.a) +
                                  ", b = " + csv::format_shortest(engine.b) + " (million USD)");
            else
                r.notes.push_back("effect engine structural: EVA_t = tariff * tons_t - cost_t - asset_base * rate with "
                                  "tariff = " + fmtx::compact(engine.tariff, 6) + " USD/t, cost0 = " +
                                  csv::format_shortest(engine.cost0) + " USD, asset_base = " +
                                  csv::format_shortest(engine.asset_base) + " USD, cost basis " +
                                  std::string(to_string(engine.cost_basis)));
        },
        cfg.engine);
    r.notes.push_back("currency: GDP present value is in million GEL and the effect balance in million USD; the share "
                      "column divides them directly with no exchange-rate conversion");
    r.notes.push_back("inflation is not modelled");
    return r;
}

Report calibration_table(const std::vector<std::pair<std::string, CalibrationResult>>& sections,
                         const std::vector<std::string>& notes) {
    Report r;
    r.title = "Calibration result";
    r.columns = {"Calibration", "Parameter", "Value", "Unit"};
    for (const auto& [label, result] : sections) {
        auto add = [&](const char* name, const std::optional<double>& v, const char* unit) {
            if (v)
                r.rows.push_back({Cell::text(label), Cell::text(name), shortest_cell(*v), Cell::text(unit)});
        };
        add("implied_discount", result.implied_discount, "annual rate");
        add("reduced_a", result.reduced_a, "million USD");
        add("reduced_b", result.reduced_b, "million USD per unit growth rate");
        add("fit_r2", result.fit_r2, "");
        add("cost0", result.cost0, "USD");
        add("asset_base", result.asset_base, "USD");
        add("residual_max", result.residual_max, label == "discount" ? "million GEL" : "million USD");
        r.rows.push_back({Cell::text(label), Cell::text("rows_checked"),
                          Cell::number(std::to_string(result.rows_checked), std::to_string(result.rows_checked)),
                          Cell::text("")});
    }
    r.notes = notes;
    return r;
}

Report regression_table(const OlsFit& fit, std::string_view x_label, std::string_view y_label) {
    Report r;
    r.title = "Least-squares fit of " + std::string(y_label) + " on " + std::string(x_label);
    r.columns = {"Parameter", "Value"};
    r.rows.push_back({Cell::text("slope"), shortest_cell(fit.slope)});
    r.rows.push_back({Cell::text("intercept"), shortest_cell(fit.intercept)});
    r.rows.push_back({Cell::text("r2"), shortest_cell(fit.r2)});
    r.rows.push_back({Cell::text("n"), Cell::number(std::to_string(fit.n), std::to_string(fit.n))});
    for (std::size_t i = 0; i < fit.residuals.size(); ++i)
        r.rows.push_back({Cell::text("residual[" + std::to_string(i + 1) + "]"), shortest_cell(fit.residuals[i])});
    return r;
}

} // namespace freight
