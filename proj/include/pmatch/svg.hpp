#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>

#include "pmatch/geometry.hpp"
#include "pmatch/matching.hpp"

namespace pmatch {

struct svg_style {
    double size = 1000;
    double margin = 50;
    double point_radius = 6;
    double stroke_width = 2.5;
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

/// Standalone SVG of the points, optionally a matching (solid segments) and a
/// piercing pair, whose piercing line is drawn dashed from the hull endpoint
/// of AB through CD. Input coordinates are scaled uniformly into the viewbox
/// with y pointing up.
inline std::string render_svg(const point_set& s, const std::optional<matching>& m = std::nullopt,
                              const std::optional<piercing_pair>& highlight = std::nullopt,
                              const svg_style& style = {}) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    if (!s.empty()) {
        min_x = max_x = static_cast<double>(s[0].x);
        min_y = max_y = static_cast<double>(s[0].y);
        for (const point& p : s) {
            min_x = std::min(min_x, static_cast<double>(p.x));
            max_x = std::max(max_x, static_cast<double>(p.x));
            min_y = std::min(min_y, static_cast<double>(p.y));
            max_y = std::max(max_y, static_cast<double>(p.y));
        }
    }
    const double inner = style.size - 2 * style.margin;
    const double extent = std::max(max_x - min_x, max_y - min_y);
    const double scale = extent > 0 ? inner / extent : 1.0;
    const double off_x = style.margin + (inner - (max_x - min_x) * scale) / 2;
    const double off_y = style.margin + (inner - (max_y - min_y) * scale) / 2;
    auto sx = [&](double x) { return off_x + (x - min_x) * scale; };
    auto sy = [&](double y) { return off_y + (max_y - y) * scale; };

    using detail::num;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(style.size) + "\" height=\"" +
           num(style.size) + "\" viewBox=\"0 0 " + num(style.size) + " " + num(style.size) + "\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + num(style.size) + "\" height=\"" + num(style.size) +
           "\" fill=\"white\"/>\n";

    if (highlight) {
        const point a = s[highlight->piercer.first];
        const point b = s[highlight->piercer.second];
        const point c = s[highlight->pierced.first];
        const point d = s[highlight->pierced.second];
        // Solve a + t (b - a) = c + u (d - c) for the point on line AB hitting CD.
        const double rx = static_cast<double>(b.x - a.x), ry = static_cast<double>(b.y - a.y);
        const double qx = static_cast<double>(d.x - c.x), qy = static_cast<double>(d.y - c.y);
        const double den = rx * qy - ry * qx;
        double t = 1.0;
        if (den != 0) t = (static_cast<double>(c.x - a.x) * qy - static_cast<double>(c.y - a.y) * qx) / den;
        const double reach = t >= 0 ? std::max(t, 1.0) * 1.1 : std::min(t, 0.0) * 1.1;
        const double ex = static_cast<double>(a.x) + reach * rx;
        const double ey = static_cast<double>(a.y) + reach * ry;
        const double fx = t >= 0 ? static_cast<double>(a.x) : static_cast<double>(b.x);
        const double fy = t >= 0 ? static_cast<double>(a.y) : static_cast<double>(b.y);
        out += "  <line class=\"piercing\" x1=\"" + num(sx(fx)) + "\" y1=\"" + num(sy(fy)) + "\" x2=\"" +
               num(sx(ex)) + "\" y2=\"" + num(sy(ey)) + "\" stroke=\"gray\" stroke-width=\"" +
               num(style.stroke_width / 2) + "\" stroke-dasharray=\"12 8\"/>\n";
    }

    if (m) {
        for (const auto& [i, j] : m->pairs) {
            out += "  <line class=\"segment\" x1=\"" + num(sx(static_cast<double>(s[i].x))) + "\" y1=\"" +
                   num(sy(static_cast<double>(s[i].y))) + "\" x2=\"" + num(sx(static_cast<double>(s[j].x))) +
                   "\" y2=\"" + num(sy(static_cast<double>(s[j].y))) + "\" stroke=\"black\" stroke-width=\"" +
                   num(style.stroke_width) + "\"/>\n";
        }
    }

    for (std::size_t i = 0; i < s.size(); ++i) {
        out += "  <circle id=\"p" + std::to_string(i) + "\" cx=\"" + num(sx(static_cast<double>(s[i].x))) +
               "\" cy=\"" + num(sy(static_cast<double>(s[i].y))) + "\" r=\"" + num(style.point_radius) +
               "\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace pmatch
