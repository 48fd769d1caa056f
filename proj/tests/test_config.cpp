#include "freight/config.hpp"
#include "freight/csv.hpp"
#include "freight/errors.hpp"
#include "freight/reference.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <variant>

using namespace freight;

namespace {

KeyValueConfig table3_conf() {
    auto cfg = canonical_defaults();
    cfg.merge(KeyValueConfig::parse(read_file(oracle::source_path("config/table3.conf")), "file:config/table3.conf"));
    return cfg;
}

} // namespace

TEST_CASE("KeyValueConfig parsing") {
    auto cfg = KeyValueConfig::parse("# comment\n\nv0 = 3.5\n  horizon=12  \ngrowth_mode = compound\n", "file:x");
    CHECK(cfg.number("v0") == 3.5);
    CHECK(cfg.integer("horizon") == 12);
    CHECK(cfg.text("growth_mode") == "compound");
    CHECK(cfg.entries().at("v0").origin == "file:x");
    CHECK_FALSE(cfg.contains("gdp0"));
    CHECK_FALSE(cfg.get("gdp0").has_value());
    CHECK_THROWS_AS(cfg.text("gdp0"), InputError);

    CHECK_THROWS_AS(KeyValueConfig::parse("v0 = 1\nv0 = 2\n", "f"), StructuralError);
    CHECK_THROWS_AS(KeyValueConfig::parse("bogus = 1\n", "f"), StructuralError);
    CHECK_THROWS_AS(KeyValueConfig::parse("no equals sign\n", "f"), InputError);
    auto bad = KeyValueConfig::parse("v0 = ten\nhorizon = 1.5\n", "f");
    CHECK_THROWS_AS(bad.number("v0"), InputError);
    CHECK_THROWS_AS(bad.integer("horizon"), InputError);
    CHECK(KeyValueConfig::is_known_key("capm.beta"));
    CHECK_FALSE(KeyValueConfig::is_known_key("capm.alpha"));
}

TEST_CASE("merge replaces values and origins") {
    auto base = KeyValueConfig::parse("v0 = 1\nhorizon = 16\n", "file:a");
    KeyValueConfig flags;
    flags.set("v0", "2", "flag");
    base.merge(flags);
    CHECK(base.number("v0") == 2);
    CHECK(base.entries().at("v0").origin == "flag");
    CHECK(base.entries().at("horizon").origin == "file:a");
    CHECK_THROWS_AS(flags.set("nope", "1", "flag"), StructuralError);
}

TEST_CASE("parse_growth_grid") {
    auto g = parse_growth_grid("0.01:0.15:0.01");
    REQUIRE(g.size() == 15);
    CHECK(g[2] == 0.03);
    CHECK(g.back() == 0.15);
    CHECK(parse_growth_grid("0.02, 0.05,0.1") == std::vector<double>{0.02, 0.05, 0.1});
    CHECK(parse_growth_grid("0.1") == std::vector<double>{0.1});
    CHECK_THROWS_AS(parse_growth_grid("0.1:0.2:0"), InputError);
    CHECK_THROWS_AS(parse_growth_grid("0.1:0.2"), InputError);
    CHECK_THROWS_AS(parse_growth_grid("a,b"), InputError);
}

TEST_CASE("canonical defaults match the frozen oracle values") {
    const auto& d = canonical_defaults();
    CHECK(d.number("reduced.a") == doctest::Approx(oracle::table3_intercept).epsilon(1e-10));
    CHECK(d.number("reduced.b") == doctest::Approx(oracle::table3_slope).epsilon(1e-10));
    CHECK(d.number("cost0") == doctest::Approx(oracle::structural_cost0).epsilon(1e-9));
    CHECK(d.number("asset_base") == doctest::Approx(oracle::structural_asset_base).epsilon(1e-9));
    for (const auto& [k, e] : d.entries()) CHECK(e.origin == "default");
}

TEST_CASE("the bundled config agrees with the built-in defaults") {
    auto file = KeyValueConfig::parse(read_file(oracle::source_path("config/table3.conf")), "file");
    const auto& d = canonical_defaults();
    for (const auto& [k, e] : file.entries()) {
        INFO(k);
        REQUIRE(d.contains(k));
        auto fv = csv::try_parse_number(e.value);
        auto dv = csv::try_parse_number(d.text(k));
        if (fv && dv)
            CHECK(*fv == doctest::Approx(*dv).epsilon(1e-9));
        else
            CHECK(e.value == d.text(k));
    }
}

TEST_CASE("resolve_scenario from the bundled config") {
    auto res = resolve_scenario(table3_conf());
    const auto& c = res.config;
    CHECK(res.discount_source == "implied");
    CHECK(c.gdp.discount == doctest::Approx(oracle::implied_rate).epsilon(1e-11));
    CHECK(c.v0 == reference::matrix_base_volume);
    CHECK(c.horizon == 16);
    CHECK(c.mode == GrowthMode::simple);
    CHECK(c.growth_grid.size() == 15);
    REQUIRE(std::holds_alternative<ReducedForm>(c.engine));
    CHECK(std::get<ReducedForm>(c.engine).b == doctest::Approx(oracle::table3_slope));
    CHECK_FALSE(res.derived.empty());
}

TEST_CASE("discount selection") {
    auto cfg = table3_conf();
    cfg.set("discount_rate", "0.08", "flag");
    std::string src;
    CHECK(resolve_discount(cfg, &src) == 0.08);
    CHECK(src == "explicit");

    cfg.set("discount_rate", "capm", "flag");
    cfg.set("capm.risk_free", "0.02", "flag");
    cfg.set("capm.beta", "1.2", "flag");
    cfg.set("capm.premium", "0.055", "flag");
    CHECK(resolve_discount(cfg, &src) == doctest::Approx(0.086));
    CHECK(src == "capm");

    cfg.set("discount_rate", "implied", "flag");
    cfg.set("gdp_pv_target", "-1", "flag");
    CHECK_THROWS_AS(resolve_discount(cfg), CalibrationError);
    cfg.set("discount_rate", "sometimes", "flag");
    CHECK_THROWS_AS(resolve_discount(cfg), InputError);
}

TEST_CASE("structural engine selection") {
    auto cfg = table3_conf();
    cfg.set("engine", "structural", "flag");
    auto res = resolve_scenario(cfg);
    REQUIRE(std::holds_alternative<StructuralForm>(res.config.engine));
    const auto& s = std::get<StructuralForm>(res.config.engine);
    CHECK(s.tariff == 10);
    CHECK(s.cost_basis == CostBasis::volume_scaled);
    cfg.set("engine", "neural", "flag");
    CHECK_THROWS_AS(resolve_scenario(cfg), InputError);
}
