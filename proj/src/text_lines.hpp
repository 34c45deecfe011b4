#pragma once

#include "logder/arrangement.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace logder::detail {

struct Line {
    std::size_t number;  // 1-based
    std::string text;    // comment stripped, trimmed
};

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// All lines with '#' comments removed; blank lines are kept (as empty text)
// so block-structured formats can see separators.
inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        out.push_back({number, trim(raw)});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

// Parses "vars: l" from the first non-blank line; advances idx past it.
inline std::size_t parse_vars_header(const std::vector<Line>& lines, std::size_t& idx) {
    while (idx < lines.size() && lines[idx].text.empty()) ++idx;
    if (idx == lines.size()) throw FormatError("missing 'vars:' header", 0);
    const Line& h = lines[idx++];
    const std::string prefix = "vars:";
    if (h.text.rfind(prefix, 0) != 0) throw FormatError("expected 'vars: <l>' header", h.number);
    const std::string value = trim(std::string_view(h.text).substr(prefix.size()));
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(value, &used);
    } catch (const std::exception&) {
        throw FormatError("malformed variable count '" + value + "'", h.number);
    }
    if (used != value.size() || n < 1) throw FormatError("malformed variable count '" + value + "'", h.number);
    return static_cast<std::size_t>(n);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace logder::detail
