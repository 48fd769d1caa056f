#include "freight/csv.hpp"

#include "freight/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace freight::csv {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_record(std::string_view line, char delimiter, std::size_t line_no) {
    std::vector<std::string> cells;
    std::string current;
    bool quoted = false;
    bool was_quoted = false;
    std::size_t column = 1;

    auto finish = [&] {
        if (was_quoted)
            cells.push_back(current);
        else
            cells.emplace_back(trim(current));
        current.clear();
        was_quoted = false;
        ++column;
    };

    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && trim(current).empty()) {
            current.clear();
            quoted = true;
            was_quoted = true;
        } else if (c == delimiter) {
            finish();
        } else if (was_quoted) {
            if (c != ' ' && c != '\t' && c != '\r')
                throw ParseError("unexpected text after closing quote", line_no, column);
        } else {
            current.push_back(c);
        }
    }
    if (quoted)
        throw ParseError("unterminated quoted field", line_no, column);
    finish();
    return cells;
}

namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        fn(text.substr(pos, end - pos), line_no);
        if (end == text.size())
            break;
        pos = end + 1;
    }
}

} // namespace

std::vector<Record> read_records(std::string_view text, char delimiter) {
    std::vector<Record> records;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#')
            return;
        records.push_back({line_no, split_record(line, delimiter, line_no)});
    });
    return records;
}

std::vector<std::string> read_comments(std::string_view text) {
    std::vector<std::string> out;
    for_each_line(text, [&](std::string_view line, std::size_t) {
        const auto t = trim(line);
        if (!t.empty() && t.front() == '#')
            out.emplace_back(trim(t.substr(1)));
    });
    return out;
}

std::optional<double> try_parse_number(std::string_view cell) {
    cell = trim(cell);
    if (cell.empty())
        return std::nullopt;
    if (cell.front() == '+')
        cell.remove_prefix(1);
    double value = 0.0;
    const auto* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), last, value, std::chars_format::general);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        return std::nullopt;
    return value;
}

double parse_number(std::string_view cell, std::size_t line, std::size_t column) {
    if (trim(cell).empty())
        throw StructuralError("missing cell at line " + std::to_string(line) + ", column " + std::to_string(column));
    if (auto v = try_parse_number(cell))
        return *v;
    throw ParseError("non-numeric cell '" + std::string(cell) + "'", line, column);
}

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string quote(std::string_view field, char delimiter) {
    if (field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += "\"\"";
        else
            out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& cells, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out.push_back(delimiter);
        out += quote(cells[i], delimiter);
    }
    return out;
}

Table Table::parse(std::string_view text, char delimiter) {
    auto records = read_records(text, delimiter);
    if (records.empty())
        throw StructuralError("table has no header row");
    Table t;
    t.header_ = std::move(records.front().cells);
    t.header_line_ = records.front().line;
    records.erase(records.begin());
    t.rows_ = std::move(records);
    return t;
}

std::optional<std::size_t> Table::find_column(std::string_view name) const {
    for (std::size_t i = 0; i < header_.size(); ++i)
        if (header_[i] == name)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> Table::find_row(std::string_view label) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!rows_[i].cells.empty() && rows_[i].cells.front() == label)
            return i;
    return std::nullopt;
}

std::vector<double> Table::column_values(std::size_t column) const {
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        if (column >= r.cells.size())
            throw StructuralError("missing cell at line " + std::to_string(r.line) + ", column " +
                                  std::to_string(column + 1));
        out.push_back(parse_number(r.cells[column], r.line, column + 1));
    }
    return out;
}

std::vector<double> Table::row_values(std::size_t row) const {
    const auto& r = rows_.at(row);
    std::vector<double> out;
    for (std::size_t c = 1; c < header_.size(); ++c) {
        if (c >= r.cells.size())
            throw StructuralError("missing cell at line " + std::to_string(r.line) + ", column " +
                                  std::to_string(c + 1));
        out.push_back(parse_number(r.cells[c], r.line, c + 1));
    }
    return out;
}

std::vector<double> Table::header_values() const {
    std::vector<double> out;
    for (std::size_t c = 1; c < header_.size(); ++c)
        out.push_back(parse_number(header_[c], header_line_, c + 1));
    return out;
}

} // namespace freight::csv
