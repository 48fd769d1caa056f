#include "freight/cli.hpp"

#include "freight/config.hpp"
#include "freight/csv.hpp"
#include "freight/data_model.hpp"
#include "freight/errors.hpp"
#include "freight/growth.hpp"
#include "freight/reference.hpp"
#include "freight/regress.hpp"
#include "freight/report.hpp"
#include "freight/scenario.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <ostream>

namespace freight::cli {

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

namespace {

struct Context {
    RunManifest manifest;

    std::string load(const std::string& path) {
        auto text = read_file(path);
        manifest.inputs.emplace_back(path, sha256_hex(text));
        return text;
    }
};

// Attaches the file path to errors raised while reading its contents.
template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

char parse_delimiter(const std::string& s) {
    if (s == "\\t" || s == "tab")
        return '\t';
    if (s.size() != 1)
        throw InputError("delimiter must be a single character");
    return s.front();
}

void record_config(RunManifest& m, const KeyValueConfig& cfg) {
    for (const auto& [k, e] : cfg.entries())
        m.config.emplace_back(k, e.value + " [" + e.origin + "]");
}

KeyValueConfig merged_config(Context& ctx, const std::string& config_path, const std::vector<std::string>& sets,
                             const std::vector<std::pair<std::string, std::string>>& flags) {
    KeyValueConfig cfg = canonical_defaults();
    if (!config_path.empty()) {
        const auto text = ctx.load(config_path);
        cfg.merge(with_path(config_path, [&] { return KeyValueConfig::parse(text, "file"); }));
    }
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw InputError("--set expects key=value, got '" + s + "'");
        cfg.set(std::string(csv::trim(s.substr(0, eq))), std::string(csv::trim(s.substr(eq + 1))), "flag");
    }
    for (const auto& [k, v] : flags)
        if (!v.empty())
            cfg.set(k, v, "flag");
    return cfg;
}

std::vector<double> select_series(const csv::Table& table, const std::string& selector, bool allow_header) {
    std::optional<std::size_t> col = table.find_column(selector);
    if (!col)
        col = matrix_column_alias(selector);
    if (col && *col < table.header().size()) {
        // The label column of a row-oriented table (category,2003,2004,...) selects the header years.
        if (*col == 0 && allow_header && !table.rows().empty() &&
            !csv::try_parse_number(table.rows().front().cells.front()))
            return table.header_values();
        return table.column_values(*col);
    }
    if (allow_header && selector == "year" && table.header().size() > 1 && csv::try_parse_number(table.header()[1]))
        return table.header_values();
    if (auto row = table.find_row(selector))
        return table.row_values(*row);
    throw InputError("no column or row named '" + selector + "'");
}

std::vector<GrowthObservation> target_rows(Context& ctx, const std::string& target) {
    std::vector<GrowthObservation> rows;
    if (target == "table3") {
        for (const auto& r : reference::table3())
            rows.push_back({r.growth, r.effect_pv});
        return rows;
    }
    const auto text = ctx.load(target);
    return with_path(target, [&] {
        const auto table = csv::Table::parse(text);
        const auto g = select_series(table, "g", false);
        const auto e = select_series(table, "effect", false);
        std::vector<GrowthObservation> out;
        for (std::size_t i = 0; i < g.size(); ++i)
            out.push_back({g[i], e[i]});
        return out;
    });
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format: csv, markdown or json")
        ->check(CLI::IsMember({"csv", "markdown", "md", "json"}))
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Freight economics toolkit: category growth rates, GDP shares and EVA scenario matrices",
                 "freightecon"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    std::string format = "markdown";
    std::string delimiter = ",";

    auto* cagr_cmd = app.add_subcommand("cagr", "Compound annual growth per freight category");
    std::string freight_file;
    cagr_cmd->add_option("freight-file", freight_file, "Freight table")->required();
    cagr_cmd->add_option("--delimiter", delimiter, "Cell delimiter")->capture_default_str();
    add_format_option(cagr_cmd, format);

    auto* share_cmd = app.add_subcommand("gdp-share", "Railway value added as a share of GDP");
    std::string gdp_file;
    share_cmd->add_option("gdp-file", gdp_file, "GDP table")->required();
    share_cmd->add_option("--delimiter", delimiter, "Cell delimiter")->capture_default_str();
    add_format_option(share_cmd, format);

    auto* validate_cmd = app.add_subcommand("validate", "Check component sums against totals");
    double tolerance = 0.5;
    validate_cmd->add_option("freight-file", freight_file, "Freight table")->required();
    validate_cmd->add_option("--tolerance", tolerance, "Allowed |sum - total|")->capture_default_str();
    validate_cmd->add_option("--delimiter", delimiter, "Cell delimiter")->capture_default_str();
    add_format_option(validate_cmd, format);

    auto* matrix_cmd = app.add_subcommand("matrix", "Growth scenario matrix of effect PV and GDP share");
    std::string config_path;
    std::string mode;
    std::string engine;
    std::string grid;
    std::vector<std::string> sets;
    bool no_parens = false;
    matrix_cmd->add_option("--config", config_path, "key = value configuration file");
    matrix_cmd->add_option("--mode", mode, "Volume growth: simple or compound")
        ->check(CLI::IsMember({"simple", "compound"}));
    matrix_cmd->add_option("--engine", engine, "Effect engine: reduced or structural")
        ->check(CLI::IsMember({"reduced", "structural"}));
    matrix_cmd->add_option("--grid", grid, "Growth grid, start:stop:step or a comma list");
    matrix_cmd->add_option("--set", sets, "Override a configuration key (key=value); repeatable");
    matrix_cmd->add_flag("--no-parens", no_parens, "Print negative amounts with a minus sign");
    add_format_option(matrix_cmd, format);

    auto* calibrate_cmd = app.add_subcommand("calibrate", "Recover discount rate and effect-engine parameters");
    std::string target = "table3";
    std::string what = "all";
    std::string anchors_text = "0.01,0.15";
    calibrate_cmd->add_option("--target", target, "table3 or a matrix CSV with growth and effect columns")
        ->capture_default_str();
    calibrate_cmd->add_option("--what", what, "discount, reduced, structural or all")
        ->check(CLI::IsMember({"discount", "reduced", "structural", "all"}))
        ->capture_default_str();
    calibrate_cmd->add_option("--anchors", anchors_text, "Growth rates used as structural anchors")
        ->capture_default_str();
    calibrate_cmd->add_option("--config", config_path, "key = value configuration file");
    calibrate_cmd->add_option("--set", sets, "Override a configuration key (key=value); repeatable");
    add_format_option(calibrate_cmd, format);

    auto* regress_cmd = app.add_subcommand("regress", "Least-squares line through two series of a table");
    std::string x_sel;
    std::string y_sel;
    std::string table_file;
    regress_cmd->add_option("--x", x_sel, "Column header, matrix alias or row label")->required();
    regress_cmd->add_option("--y", y_sel, "Column header, matrix alias or row label")->required();
    regress_cmd->add_option("file", table_file, "Delimiter-separated table")->required();
    regress_cmd->add_option("--delimiter", delimiter, "Cell delimiter")->capture_default_str();
    add_format_option(regress_cmd, format);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }

    Context ctx;
    ctx.manifest.version = std::string(version);
    try {
        const Format fmt = parse_format(format);
        ctx.manifest.format = std::string(to_string(fmt));
        const char delim = parse_delimiter(delimiter);
        Report report;

        if (cagr_cmd->parsed()) {
            ctx.manifest.subcommand = "cagr";
            const auto text = ctx.load(freight_file);
            const auto ds = with_path(freight_file, [&] { return parse_freight_table(text, delim); });
            report = cagr_table(cagr_report(ds));
        } else if (share_cmd->parsed()) {
            ctx.manifest.subcommand = "gdp-share";
            const auto text = ctx.load(gdp_file);
            const auto gs = with_path(gdp_file, [&] { return parse_gdp_table(text, delim); });
            report = share_table(gdp_share_table(gs), gs);
        } else if (validate_cmd->parsed()) {
            ctx.manifest.subcommand = "validate";
            ctx.manifest.config.emplace_back("tolerance", csv::format_shortest(tolerance));
            const auto text = ctx.load(freight_file);
            const auto ds = with_path(freight_file, [&] { return parse_freight_table(text, delim); });
            report = validation_table(validate_components(ds, tolerance));
        } else if (matrix_cmd->parsed()) {
            ctx.manifest.subcommand = "matrix";
            const auto cfg = merged_config(ctx, config_path, sets,
                                           {{"growth_mode", mode}, {"engine", engine}, {"growth_grid", grid}});
            record_config(ctx.manifest, cfg);
            const auto resolved = resolve_scenario(cfg);
            for (const auto& [k, v] : resolved.derived)
                ctx.manifest.config.emplace_back("resolved." + k, v);
            report = matrix_table(build_matrix(resolved.config), resolved.config, {!no_parens});
        } else if (calibrate_cmd->parsed()) {
            ctx.manifest.subcommand = "calibrate";
            const auto cfg = merged_config(ctx, config_path, sets, {});
            record_config(ctx.manifest, cfg);
            ctx.manifest.config.emplace_back("target", target);
            ctx.manifest.config.emplace_back("what", what);
            const auto rows = target_rows(ctx, target);

            std::vector<std::pair<std::string, CalibrationResult>> sections;
            std::vector<std::string> notes;
            if (what == "discount" || what == "all") {
                CalibrationResult r;
                const double gdp0 = cfg.number("gdp0");
                const double growth = cfg.number("gdp_growth");
                const int horizon = cfg.integer("horizon");
                const double target_pv = cfg.number("gdp_pv_target");
                r.implied_discount = implied_discount(gdp0, growth, horizon, target_pv);
                r.residual_max = std::abs(gdp_pv({gdp0, growth, horizon, *r.implied_discount}) - target_pv);
                r.rows_checked = 1;
                sections.emplace_back("discount", r);
                notes.push_back("implied discount inverts the projected-GDP present value " +
                                csv::format_shortest(target_pv) +
                                " (end-of-period discounting); it is a recovered rate, not a CAPM estimate");
            }
            if (what == "reduced" || what == "all") {
                sections.emplace_back("reduced", calibrate_reduced(rows));
                notes.push_back("reduced form: ordinary least squares of effect PV on growth rate");
            }
            if (what == "structural" || what == "all") {
                ctx.manifest.config.emplace_back("anchors", anchors_text);
                std::string source;
                const double discount = resolve_discount(cfg, &source);
                std::vector<GrowthObservation> anchors;
                for (const double g : parse_growth_grid(anchors_text)) {
                    const auto it = std::find_if(rows.begin(), rows.end(), [&](const GrowthObservation& o) {
                        return std::abs(o.growth - g) < 1e-12;
                    });
                    if (it == rows.end())
                        throw InputError("anchor growth rate " + csv::format_shortest(g) + " not found in target");
                    anchors.push_back(*it);
                }
                sections.emplace_back("structural",
                                      calibrate_structural(anchors, structural_setup(cfg, discount), rows));
                notes.push_back("structural: cost0 and asset_base solved from the anchors with tariff " +
                                cfg.text("tariff_usd_per_ton") + " USD/t, cost basis " + cfg.text("cost_basis") +
                                ", discount " + csv::format_shortest(discount) + " (" + source +
                                "); residual_max covers every target row");
            }
            report = calibration_table(sections, notes);
        } else if (regress_cmd->parsed()) {
            ctx.manifest.subcommand = "regress";
            ctx.manifest.config.emplace_back("x", x_sel);
            ctx.manifest.config.emplace_back("y", y_sel);
            const auto text = ctx.load(table_file);
            const auto fit = with_path(table_file, [&] {
                const auto table = csv::Table::parse(text, delim);
                const auto x = select_series(table, x_sel, true);
                const auto y = select_series(table, y_sel, true);
                return ols_fit(x, y);
            });
            report = regression_table(fit, x_sel, y_sel);
        }

        out << render(report, ctx.manifest, fmt);
        return ExitCode::ok;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::input;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::input;
    }
}

} // namespace freight::cli
