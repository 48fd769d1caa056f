#include "freight/config.hpp"

#include "freight/csv.hpp"
#include "freight/errors.hpp"
#include "freight/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace freight {

namespace {

constexpr std::array kKnownKeys{
    "gdp0",           "gdp_growth",         "horizon",         "discount_rate", "gdp_pv_target",
    "capm.risk_free", "capm.beta",          "capm.premium",    "tariff_usd_per_ton",
    "cost_adjustment", "cost0",             "asset_base",      "cost_basis",    "v0",
    "growth_grid",    "growth_mode",        "engine",          "reduced.a",     "reduced.b",
};

} // namespace

bool KeyValueConfig::is_known_key(std::string_view key) {
    return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

KeyValueConfig KeyValueConfig::parse(std::string_view text, const std::string& origin) {
    KeyValueConfig cfg;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        const auto line = csv::trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (!line.empty() && line.front() != '#') {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("expected 'key = value' in " + origin, line_no, 1);
            const std::string key(csv::trim(line.substr(0, eq)));
            const std::string value(csv::trim(line.substr(eq + 1)));
            if (key.empty())
                throw ParseError("empty key in " + origin, line_no, 1);
            if (cfg.contains(key))
                throw StructuralError("duplicate key '" + key + "' in " + origin + " (line " + std::to_string(line_no) +
                                      ")");
            cfg.set(key, value, origin);
        }
        if (end == text.size())
            break;
    }
    return cfg;
}

void KeyValueConfig::set(const std::string& key, std::string value, std::string origin) {
    if (!is_known_key(key))
        throw StructuralError("unknown configuration key '" + key + "'");
    entries_[key] = Entry{std::move(value), std::move(origin)};
}

void KeyValueConfig::merge(const KeyValueConfig& higher_priority) {
    for (const auto& [k, e] : higher_priority.entries_)
        entries_[k] = e;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    return it->second.value;
}

std::string KeyValueConfig::text(const std::string& key) const {
    if (auto v = get(key))
        return *v;
    throw InputError("missing configuration key '" + key + "'");
}

double KeyValueConfig::number(const std::string& key) const {
    const auto s = text(key);
    if (auto v = csv::try_parse_number(s))
        return *v;
    throw InputError("configuration key '" + key + "' expects a number, got '" + s + "'");
}

int KeyValueConfig::integer(const std::string& key) const {
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 1e6)
        throw InputError("configuration key '" + key + "' expects an integer");
    return static_cast<int>(v);
}

std::vector<double> parse_growth_grid(std::string_view text) {
    text = csv::trim(text);
    std::vector<double> grid;
    if (text.find(':') != std::string_view::npos) {
        std::vector<double> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find(':', pos);
            if (end == std::string_view::npos)
                end = text.size();
            const auto v = csv::try_parse_number(text.substr(pos, end - pos));
            if (!v)
                throw InputError("malformed growth grid '" + std::string(text) + "'");
            parts.push_back(*v);
            pos = end + 1;
        }
        if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
            throw InputError("growth grid range must be start:stop:step with step > 0 and stop >= start");
        const auto steps = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
        if (steps > 100000)
            throw InputError("growth grid has too many points");
        // Each point is rounded to 12 decimals so that 0.01 + 2 * 0.01 prints as 0.03.
        for (long i = 0; i <= steps; ++i)
            grid.push_back(std::round((parts[0] + static_cast<double>(i) * parts[2]) * 1e12) / 1e12);
    } else {
        for (const auto& cell : csv::split_record(text, ',', 1)) {
            const auto v = csv::try_parse_number(cell);
            if (!v)
                throw InputError("malformed growth rate '" + cell + "' in grid");
            grid.push_back(*v);
        }
    }
    if (grid.empty())
        throw InputError("growth grid is empty");
    return grid;
}

double resolve_discount(const KeyValueConfig& cfg, std::string* source) {
    const auto mode = cfg.text("discount_rate");
    if (mode == "implied") {
        if (source)
            *source = "implied";
        return implied_discount(cfg.number("gdp0"), cfg.number("gdp_growth"), cfg.integer("horizon"),
                                cfg.number("gdp_pv_target"));
    }
    if (mode == "capm") {
        if (source)
            *source = "capm";
        return capm_rate({cfg.number("capm.risk_free"), cfg.number("capm.beta"), cfg.number("capm.premium")});
    }
    if (source)
        *source = "explicit";
    return cfg.number("discount_rate");
}

StructuralSetup structural_setup(const KeyValueConfig& cfg, double discount) {
    return {cfg.number("tariff_usd_per_ton"),
            discount,
            cfg.number("cost_adjustment"),
            cfg.number("v0"),
            cfg.integer("horizon"),
            parse_growth_mode(cfg.text("growth_mode")),
            parse_cost_basis(cfg.text("cost_basis"))};
}

ResolvedScenario resolve_scenario(const KeyValueConfig& cfg) {
    ResolvedScenario out;
    auto& sc = out.config;
    sc.v0 = cfg.number("v0");
    sc.growth_grid = parse_growth_grid(cfg.text("growth_grid"));
    sc.horizon = cfg.integer("horizon");
    sc.mode = parse_growth_mode(cfg.text("growth_mode"));
    sc.cost_adjustment = cfg.number("cost_adjustment");

    const double discount = resolve_discount(cfg, &out.discount_source);
    sc.gdp = GdpProjection{cfg.number("gdp0"), cfg.number("gdp_growth"), sc.horizon, discount};
    out.derived.emplace_back("discount_rate", csv::format_shortest(discount));

    const auto engine = cfg.text("engine");
    if (engine == "reduced") {
        sc.engine = ReducedForm{cfg.number("reduced.a"), cfg.number("reduced.b")};
    } else if (engine == "structural") {
        sc.engine = StructuralForm{cfg.number("tariff_usd_per_ton"), cfg.number("cost0"), cfg.number("asset_base"),
                                   parse_cost_basis(cfg.text("cost_basis"))};
    } else {
        throw InputError("unknown engine '" + engine + "' (expected reduced or structural)");
    }
    validate(sc);
    return out;
}

const KeyValueConfig& canonical_defaults() {
    static const KeyValueConfig defaults = [] {
        KeyValueConfig cfg;
        auto put = [&](const std::string& k, const std::string& v) { cfg.set(k, v, "default"); };
        put("v0", csv::format_shortest(reference::matrix_base_volume));
        put("growth_grid", "0.01:0.15:0.01");
        put("horizon", std::to_string(reference::horizon_years));
        put("growth_mode", "simple");
        put("cost_adjustment", csv::format_shortest(reference::cost_adjustment));
        put("gdp0", csv::format_shortest(reference::gdp_2017));
        put("gdp_growth", csv::format_shortest(reference::gdp_growth));
        put("discount_rate", "implied");
        put("gdp_pv_target", csv::format_shortest(reference::table3_gdp_pv));
        put("engine", "reduced");
        put("tariff_usd_per_ton", csv::format_shortest(reference::tariff_usd_per_ton));
        put("cost_basis", "volume_scaled");

        std::vector<GrowthObservation> rows;
        for (const auto& r : reference::table3())
            rows.push_back({r.growth, r.effect_pv});
        const auto reduced = calibrate_reduced(rows);
        put("reduced.a", csv::format_shortest(*reduced.reduced_a));
        put("reduced.b", csv::format_shortest(*reduced.reduced_b));

        const double discount = resolve_discount(cfg);
        const std::array anchors{rows.front(), rows.back()};
        const auto structural = calibrate_structural(anchors, structural_setup(cfg, discount));
        put("cost0", csv::format_shortest(*structural.cost0));
        put("asset_base", csv::format_shortest(*structural.asset_base));
        return cfg;
    }();
    return defaults;
}

} // namespace freight
