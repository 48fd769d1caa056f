#include "freight/errors.hpp"
#include "freight/format.hpp"
#include "freight/report.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace freight;

TEST_CASE("fixed-point helpers") {
    CHECK(fmtx::fixed(12.405, 2) == "12.40");
    CHECK(fmtx::fixed(-0.00001, 2) == "0.00");
    CHECK(fmtx::rounded(300.1684, 2) == 300.17);
    CHECK(fmtx::percent(0.0682, 2) == "6.82%");
    CHECK(fmtx::percent_compact(0.01) == "1%");
    CHECK(fmtx::percent_compact(0.025) == "2.5%");
    CHECK(fmtx::compact(1.500, 3) == "1.5");
    CHECK(fmtx::grouped(530161, 0) == "530,161");
    CHECK(fmtx::grouped(-1234567.891, 2) == "-1,234,567.89");
    CHECK(fmtx::grouped(999, 0) == "999");
    CHECK(fmtx::dollars(-59.66, 2, true) == "($59.66)");
    CHECK(fmtx::dollars(-59.66, 2, false) == "-$59.66");
    CHECK(fmtx::dollars(20.3, 2, true) == "$20.30");
}

TEST_CASE("format names") {
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("markdown") == Format::markdown);
    CHECK(parse_format("json") == Format::json);
    CHECK(to_string(Format::json) == "json");
    CHECK_THROWS_AS(parse_format("xml"), InputError);
}

TEST_CASE("matrix columns and aliases") {
    auto cols = matrix_columns(16);
    REQUIRE(cols.size() == 6);
    CHECK(cols[1].find("16 years") != std::string::npos);
    CHECK(matrix_column_alias("g") == std::size_t{0});
    CHECK(matrix_column_alias("effect") == std::size_t{4});
    CHECK(matrix_column_alias("share") == std::size_t{5});
    CHECK_FALSE(matrix_column_alias("nothing").has_value());
}

TEST_CASE("render produces the three formats with a manifest") {
    Report r;
    r.title = "demo";
    r.columns = {"name", "value", "missing"};
    r.rows = {{Cell::text("a, b"), Cell::number("$1.50", "1.5"), Cell::null("undefined")}};
    r.notes = {"a note"};
    RunManifest m{"demo", "1.0.0", "csv", {{"k", "v"}}, {{"in.csv", "abc"}}};

    auto csv = render(r, m, Format::csv);
    CHECK(csv.find("# subcommand = demo") != std::string::npos);
    CHECK(csv.find("# config.k = v") != std::string::npos);
    CHECK(csv.find("# input.in.csv = sha256:abc") != std::string::npos);
    CHECK(csv.find("# note: a note") != std::string::npos);
    CHECK(csv.find("\"a, b\",1.5,") != std::string::npos);

    auto md = render(r, m, Format::markdown);
    CHECK(md.find("| a, b | $1.50 | undefined |") != std::string::npos);
    CHECK(md.find("Run manifest:") != std::string::npos);

    auto js = nlohmann::json::parse(render(r, m, Format::json));
    CHECK(js["title"] == "demo");
    CHECK(js["rows"][0]["value"] == 1.5);
    CHECK(js["rows"][0]["missing"].is_null());
    CHECK(js["manifest"]["config"]["k"] == "v");
    CHECK(js["manifest"]["inputs"]["in.csv"] == "sha256:abc");
}

TEST_CASE("render is deterministic") {
    Report r;
    r.title = "t";
    r.columns = {"x"};
    r.rows = {{Cell::number("2", "2")}};
    RunManifest m{"s", "1", "markdown", {}, {}};
    for (auto f : {Format::csv, Format::markdown, Format::json}) CHECK(render(r, m, f) == render(r, m, f));
}
