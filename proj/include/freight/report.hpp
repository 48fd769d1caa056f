#pragma once

#include "freight/data_model.hpp"
#include "freight/growth.hpp"
#include "freight/regress.hpp"
#include "freight/scenario.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freight {

enum class Format { csv, markdown, json };

std::string_view to_string(Format f);
Format parse_format(std::string_view s);

/// One rendered value. `display` is the human form used in Markdown, `machine`
/// the plain decimal text used in CSV and as the JSON number. Both derive
/// from the same rounded value.
struct Cell {
    enum class Kind { number, text, null };

    std::string display;
    std::string machine;
    Kind kind = Kind::text;

    static Cell text(std::string s);
    static Cell number(std::string display, std::string machine);
    static Cell null(std::string display);
};

struct Report {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> notes;
};

struct RunManifest {
    std::string subcommand;
    std::string version;
    std::string format;
    std::vector<std::pair<std::string, std::string>> config; // resolved settings, ordered
    std::vector<std::pair<std::string, std::string>> inputs; // path -> sha256
};

std::string render(const Report& report, const RunManifest& manifest, Format format);

struct RenderOptions {
    bool parenthesize_negative = true;
};

/// Column headers of the growth matrix, matching the published table.
std::vector<std::string> matrix_columns(int horizon);

/// Short selectors accepted in place of the matrix column headers:
/// g, volume, cost_adjustment, gdp_pv, effect, share.
std::optional<std::size_t> matrix_column_alias(std::string_view selector);

Report cagr_table(const CagrReport& report);
Report share_table(const std::vector<ShareRow>& rows, const GdpSeries& source);
Report validation_table(const ValidationReport& report);
Report matrix_table(const std::vector<ScenarioRow>& rows, const ScenarioConfig& cfg, RenderOptions options = {});
/// One block of rows per (label, result) section, e.g. "discount", "reduced", "structural".
Report calibration_table(const std::vector<std::pair<std::string, CalibrationResult>>& sections,
                         const std::vector<std::string>& notes = {});
Report regression_table(const OlsFit& fit, std::string_view x_label, std::string_view y_label);

} // namespace freight
