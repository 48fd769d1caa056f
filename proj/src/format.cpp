#include "freight/format.hpp"

#include <fmt/format.h>

#include <cstdlib>

namespace freight::fmtx {

namespace {

bool is_negative_zero_text(const std::string& s) {
    if (s.empty() || s.front() != '-')
        return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] != '0' && s[i] != '.')
            return false;
    return true;
}

std::string strip_zeros(std::string s) {
    if (s.find('.') == std::string::npos)
        return s;
    while (!s.empty() && s.back() == '0')
        s.pop_back();
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

} // namespace

std::string fixed(double value, int decimals) {
    auto s = fmt::format("{:.{}f}", value, decimals);
    if (is_negative_zero_text(s))
        s.erase(0, 1);
    return s;
}

double rounded(double value, int decimals) {
    return std::strtod(fixed(value, decimals).c_str(), nullptr);
}

std::string percent(double fraction, int decimals) {
    return fixed(fraction * 100.0, decimals) + "%";
}

std::string compact(double value, int max_decimals) {
    auto s = strip_zeros(fixed(value, max_decimals));
    return s == "-0" ? "0" : s;
}

std::string percent_compact(double fraction, int max_decimals) {
    return compact(fraction * 100.0, max_decimals) + "%";
}

std::string grouped(double value, int decimals) {
    std::string s = fixed(value, decimals);
    const bool negative = !s.empty() && s.front() == '-';
    if (negative)
        s.erase(0, 1);
    auto point = s.find('.');
    std::string integer = s.substr(0, point);
    const std::string fraction = point == std::string::npos ? "" : s.substr(point);
    std::string out;
    const auto n = integer.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(integer[i]);
        const auto remaining = n - i - 1;
        if (remaining > 0 && remaining % 3 == 0)
            out.push_back(',');
    }
    return (negative ? "-" : "") + out + fraction;
}

std::string dollars(double value, int decimals, bool parenthesize_negative) {
    const std::string body = grouped(value, decimals);
    if (!body.empty() && body.front() == '-') {
        const auto magnitude = body.substr(1);
        return parenthesize_negative ? "($" + magnitude + ")" : "-$" + magnitude;
    }
    return "$" + body;
}

} // namespace freight::fmtx
