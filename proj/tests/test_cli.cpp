#include "freight/cli.hpp"
#include "freight/csv.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace freight;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "freightecon");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return oracle::source_path(rel); }

std::string temp_file(const std::string& name, const std::string& contents) {
    auto p = std::filesystem::temp_directory_path() / ("freight_tests_" + name);
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
}

// Body table of a CSV report: '#' lines are manifest and notes.
csv::Table body(const std::string& text) { return csv::Table::parse(text); }

// "$1,234.50" -> 1234.5, "($59.66)" -> -59.66, "0.057%" -> 0.057
double display_number(std::string s, bool& is_percent) {
    bool neg = false;
    is_percent = false;
    std::string t;
    for (char c : s) {
        if (c == '(' || c == '-') neg = true;
        else if (c == '%') is_percent = true;
        else if (c == '$' || c == ',' || c == ')' || c == ' ') continue;
        else t += c;
    }
    double v = std::stod(t);
    return neg ? -v : v;
}

std::vector<std::vector<std::string>> markdown_rows(const std::string& md) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(md);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.rfind("|", 0) != 0) continue;
        if (line.rfind("|---", 0) == 0) {
            header_seen = true;
            continue;
        }
        if (!header_seen) continue;
        std::vector<std::string> cells;
        std::size_t pos = 1;
        while (pos < line.size()) {
            auto next = line.find('|', pos);
            if (next == std::string::npos) break;
            cells.emplace_back(csv::trim(std::string_view(line).substr(pos, next - pos)));
            pos = next + 1;
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::usage);
    CHECK(run({"frobnicate"}).code == cli::usage);
    CHECK(run({"cagr"}).code == cli::usage);
    CHECK(run({"cagr", data("data/freight_2003_2017.csv"), "--format", "xml"}).code == cli::usage);
    CHECK(run({"--version"}).code == cli::ok);
    CHECK(run({"--help"}).code == cli::ok);

    auto missing = run({"cagr", "/nonexistent.csv"});
    CHECK(missing.code == cli::input);
    CHECK(missing.err.find("/nonexistent.csv") != std::string::npos);

    auto bad = temp_file("bad.csv", "category,2003,2004\ntotal,1,x\n");
    auto r = run({"cagr", bad});
    CHECK(r.code == cli::input);
    CHECK(r.err.find("line 2") != std::string::npos);

    auto gdp_bad = temp_file("gdp_bad.csv", "2006,1,0\n");
    CHECK(run({"gdp-share", gdp_bad}).code == cli::input);

    CHECK(run({"validate", data("data/freight_2003_2017.csv"), "--tolerance", "0"}).code == cli::domain);
    CHECK(run({"calibrate", "--what", "discount", "--set", "gdp_pv_target=-5"}).code == cli::domain);
    CHECK(run({"matrix", "--set", "cost_basis=fixed", "--engine", "structural"}).code == cli::ok);
    CHECK(run({"calibrate", "--what", "structural", "--set", "cost_basis=fixed"}).code == cli::domain);
    CHECK(run({"matrix", "--set", "no_such_key=1"}).code == cli::input);
    CHECK(run({"matrix", "--config", "/nonexistent.conf"}).code == cli::input);
    CHECK(run({"matrix", "--grid", "-2"}).code == cli::domain);
}

TEST_CASE("gdp-share reports the 2006 share") {
    auto r = run({"gdp-share", data("data/gdp_2006_2017.csv")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("| 2006 | 65.6 | 13,790 | 0.476% |") != std::string::npos);
}

TEST_CASE("cagr prints every category and annotates total volume") {
    auto r = run({"cagr", data("data/freight_2003_2017.csv"), "--format", "csv"});
    REQUIRE(r.code == 0);
    auto t = body(r.out);
    CHECK(t.rows().size() == 21);
    CHECK(r.out.find("-3.09%") != std::string::npos);
}

TEST_CASE("validate lists the published inconsistencies") {
    auto r = run({"validate", data("data/freight_2003_2017.csv"), "--format", "csv"});
    REQUIRE(r.code == 0);
    auto t = body(r.out);
    REQUIRE(t.rows().size() == 2);
    CHECK(t.rows()[0].cells[0] == "2003");
    CHECK(t.rows()[0].cells[4] == "200.1");
    CHECK(t.rows()[1].cells[0] == "2005");
}

TEST_CASE("matrix reruns are byte-identical") {
    for (auto fmt : {"csv", "markdown", "json"}) {
        auto a = run({"matrix", "--format", fmt});
        auto b = run({"matrix", "--format", fmt});
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        auto c = run({"matrix", "--format", fmt, "--config", data("config/table3.conf")});
        auto d = run({"matrix", "--format", fmt, "--config", data("config/table3.conf")});
        CHECK(c.out == d.out);
    }
}

TEST_CASE("csv, markdown and json carry the same numbers") {
    auto csv_out = run({"matrix", "--format", "csv"}).out;
    auto md_out = run({"matrix", "--format", "markdown"}).out;
    auto js = nlohmann::json::parse(run({"matrix", "--format", "json"}).out);
    auto t = body(csv_out);
    auto md = markdown_rows(md_out);
    REQUIRE(t.rows().size() == 15);
    REQUIRE(md.size() == 15);
    REQUIRE(js["rows"].size() == 15);
    const auto& cols = t.header();
    for (std::size_t i = 0; i < 15; ++i) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            double machine = csv::parse_number(t.rows()[i].cells[c], 1, 1);
            CHECK(js["rows"][i][cols[c]].get<double>() == machine);
            bool pct = false;
            double shown = display_number(md[i][c], pct);
            double expect = pct ? machine * 100 : machine;
            CHECK(shown == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("regress over a matrix CSV recovers the effect slope") {
    auto m = run({"matrix", "--format", "csv"});
    auto path = temp_file("matrix.csv", m.out);
    auto r = run({"regress", "--x", "g", "--y", "effect", path, "--format", "json"});
    REQUIRE(r.code == 0);
    auto js = nlohmann::json::parse(r.out);
    double slope = 0;
    for (const auto& row : js["rows"])
        if (row["Parameter"] == "slope") slope = row["Value"].get<double>();
    CHECK(slope == doctest::Approx(oracle::table3_slope).epsilon(1e-4));

    auto by_header = run({"regress", "--x", "Growth in Freight Transportation (CAGR %)", "--y",
                          "The total volume of transportation after 16 years", path});
    CHECK(by_header.code == 0);
    CHECK(run({"regress", "--x", "g", "--y", "nothing", path}).code == cli::input);

    auto freight = run({"regress", "--x", "year", "--y", "local", data("data/freight_2003_2017.csv")});
    CHECK(freight.code == 0);
}

TEST_CASE("calibrate reports every section") {
    auto r = run({"calibrate", "--format", "json"});
    REQUIRE(r.code == 0);
    auto js = nlohmann::json::parse(r.out);
    double rate = 0, cost0 = 0, resid = 1;
    for (const auto& row : js["rows"]) {
        if (row["Parameter"] == "implied_discount") rate = row["Value"].get<double>();
        if (row["Parameter"] == "cost0") cost0 = row["Value"].get<double>();
        if (row["Calibration"] == "structural" && row["Parameter"] == "residual_max") resid = row["Value"].get<double>();
    }
    CHECK(rate == doctest::Approx(oracle::implied_rate).epsilon(1e-11));
    CHECK(cost0 == doctest::Approx(oracle::structural_cost0).epsilon(1e-9));
    CHECK(resid <= 0.05);

    auto m = run({"matrix", "--format", "csv"});
    auto path = temp_file("matrix_target.csv", m.out);
    auto fromfile = run({"calibrate", "--what", "reduced", "--target", path});
    CHECK(fromfile.code == 0);
}

TEST_CASE("flags override the configuration file") {
    auto r = run({"matrix", "--config", data("config/table3.conf"), "--grid", "0.05", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(body(r.out).rows().size() == 1);
    CHECK(r.out.find("# config.growth_grid = 0.05 [flag]") != std::string::npos);
    CHECK(r.out.find("# config.v0 = 10.698 [file]") != std::string::npos);
    CHECK(r.out.find("sha256:") != std::string::npos);
}

TEST_CASE("sha256_hex") {
    CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
