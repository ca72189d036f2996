#pragma once

// Text formats.
//
// Point set: '#' lines and blank lines are ignored; the first significant line
// holds n, followed by n lines of two signed decimal integers.
//
// Matching: one matching per line as a list of index pairs "(i,j) (k,l) ...".

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/error.hpp"
#include "pmatch/geometry.hpp"
#include "pmatch/matching.hpp"

namespace pmatch {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

template <class Int>
bool parse_int(std::string_view token, Int& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

inline error parse_failure(std::size_t line, const std::string& what) {
    return error(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

inline point_set parse_point_set(std::istream& in, const validation_options& options = {}) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> expected;
    std::vector<point> pts;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto tokens = detail::split_ws(body);
        if (!expected) {
            std::size_t n = 0;
            if (tokens.size() != 1 || !detail::parse_int(tokens[0], n))
                throw detail::parse_failure(line_no, "expected the point count");
            expected = n;
            continue;
        }
        if (pts.size() == *expected) throw detail::parse_failure(line_no, "more points than declared");
        point p;
        if (tokens.size() != 2 || !detail::parse_int(tokens[0], p.x) || !detail::parse_int(tokens[1], p.y))
            throw detail::parse_failure(line_no, "expected two integers");
        if (!detail::in_range(p))
            throw error(errc::coordinate_out_of_range,
                        "line " + std::to_string(line_no) + ": " + detail::describe(p) + " exceeds 2^30");
        pts.push_back(p);
    }
    if (!expected) throw detail::parse_failure(line_no, "missing point count");
    if (pts.size() != *expected)
        throw detail::parse_failure(line_no, "declared " + std::to_string(*expected) + " points, found " +
                                                 std::to_string(pts.size()));
    return point_set(std::move(pts), options);
}

inline point_set parse_point_set(std::string_view text, const validation_options& options = {}) {
    std::istringstream in{std::string(text)};
    return parse_point_set(in, options);
}

inline point_set read_point_set(const std::filesystem::path& path, const validation_options& options = {}) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path.string());
    return parse_point_set(in, options);
}

inline std::string format_point_set(const point_set& s) {
    std::string out = std::to_string(s.size()) + "\n";
    for (const point& p : s) out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    return out;
}

inline std::string format_matching(const matching& m) {
    std::string out;
    for (const auto& [a, b] : m.pairs) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return out;
}

/// Parses "(i,j) (k,l) ..." into a canonical matching. Whitespace around the
/// numbers is allowed.
inline matching parse_matching(std::string_view text, std::size_t line_no = 1) {
    std::vector<segment> pairs;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> std::size_t {
        skip();
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t v = 0;
        if (!detail::parse_int(text.substr(start, i - start), v))
            throw detail::parse_failure(line_no, "expected an index");
        return v;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw detail::parse_failure(line_no, std::string("expected '") + c + "'");
        ++i;
    };
    for (skip(); i < text.size(); skip()) {
        expect('(');
        const std::size_t a = number();
        expect(',');
        const std::size_t b = number();
        expect(')');
        if (a == b) throw detail::parse_failure(line_no, "pair joins a point to itself");
        pairs.push_back(make_segment(a, b));
    }
    return canonical_matching(std::move(pairs));
}

/// First significant line of a matching file.
inline matching read_matching(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        return parse_matching(body, line_no);
    }
    throw error(errc::parse_error, path.string() + " holds no matching");
}

}  // namespace pmatch
