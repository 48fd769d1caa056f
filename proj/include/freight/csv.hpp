#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freight::csv {

struct Record {
    std::size_t line = 0; // 1-based line in the source text
    std::vector<std::string> cells;
};

/// Splits one delimiter-separated line. Double-quoted fields may contain the
/// delimiter; a doubled quote inside a quoted field is a literal quote.
std::vector<std::string> split_record(std::string_view line, char delimiter, std::size_t line_no);

/// Reads every non-blank line that does not start with '#'. Surrounding
/// whitespace is trimmed from unquoted cells.
std::vector<Record> read_records(std::string_view text, char delimiter = ',');

/// Comment lines ('#' prefix, marker stripped and trimmed) in order of appearance.
std::vector<std::string> read_comments(std::string_view text);

/// Strict decimal-point number parser; the whole cell must be consumed.
/// Throws ParseError carrying the given location.
double parse_number(std::string_view cell, std::size_t line, std::size_t column);

std::optional<double> try_parse_number(std::string_view cell);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_shortest(double value);

/// Quotes a field when it contains the delimiter, a quote or a newline.
std::string quote(std::string_view field, char delimiter = ',');

std::string join(const std::vector<std::string>& cells, char delimiter = ',');

std::string_view trim(std::string_view s);

/// Header plus body, used for column/row selection over arbitrary tables.
class Table {
public:
    static Table parse(std::string_view text, char delimiter = ',');

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<Record>& rows() const { return rows_; }

    std::optional<std::size_t> find_column(std::string_view name) const;
    std::optional<std::size_t> find_row(std::string_view label) const;

    /// Numeric values of one column, top to bottom.
    std::vector<double> column_values(std::size_t column) const;
    /// Numeric values of one row from the second cell onward.
    std::vector<double> row_values(std::size_t row) const;
    /// Header cells from the second onward, parsed as numbers.
    std::vector<double> header_values() const;

private:
    std::vector<std::string> header_;
    std::size_t header_line_ = 0;
    std::vector<Record> rows_;
};

} // namespace freight::csv
