#pragma once

/* Science overlay maps: a corpus's category counts projected onto a fixed
   basemap of subject categories. The basemap (positions, macro-discipline
   clusters, colors) is an input file, never derived here. Node sizes are
   normalized so the largest node is 1; AREA scaling keeps rendered area
   proportional to the count (radius ~ sqrt), RADIUS scaling keeps the
   radius itself proportional. */

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biblioscope/errors.hpp"
#include "biblioscope/indicators.hpp"
#include "biblioscope/text.hpp"

namespace biblioscope {

struct BasemapNode {
    std::string label;
    double x = 0;
    double y = 0;
    std::string macro_discipline;
    std::string color;  // SVG fill
};

struct Basemap {
    std::vector<BasemapNode> nodes;  // file order

    const BasemapNode* find(std::string_view label) const;
    std::size_t size() const { return nodes.size(); }
};

namespace detail {

// category labels compare case- and whitespace-insensitively
inline std::string category_key(std::string_view label) {
    return to_lower_ascii(collapse_spaces(label));
}

} // namespace detail

inline const BasemapNode* Basemap::find(std::string_view label) const {
    const std::string key = detail::category_key(label);
    for (const auto& node : nodes)
        if (detail::category_key(node.label) == key) return &node;
    return nullptr;
}

// TSV schema: LABEL, X, Y, MACRO, COLOR. '#' comments allowed. Duplicate
// labels and non-numeric coordinates are load errors naming the line.
inline Basemap load_basemap(std::istream& in, const std::string& name = "basemap.tsv") {
    Basemap map;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && starts_with(line, "\xEF\xBB\xBF")) line.erase(0, 3);
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 5)
            throw ConfigError(name + ":" + std::to_string(line_no)
                              + ": expected LABEL, X, Y, MACRO, COLOR");
        BasemapNode node;
        node.label = trim(cols[0]);
        if (node.label.empty())
            throw ConfigError(name + ":" + std::to_string(line_no) + ": empty label");
        if (!seen.insert(detail::category_key(node.label)).second)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": duplicate label '"
                              + node.label + "'");
        try {
            std::size_t pos = 0;
            node.x = std::stod(trim(cols[1]), &pos);
            if (pos != trim(cols[1]).size()) throw std::invalid_argument("trailing");
            pos = 0;
            node.y = std::stod(trim(cols[2]), &pos);
            if (pos != trim(cols[2]).size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ConfigError(name + ":" + std::to_string(line_no) + ": non-numeric coordinate");
        }
        if (!std::isfinite(node.x) || !std::isfinite(node.y))
            throw ConfigError(name + ":" + std::to_string(line_no) + ": non-finite coordinate");
        node.macro_discipline = trim(cols[3]);
        node.color = trim(cols[4]);
        if (node.macro_discipline.empty())
            throw ConfigError(name + ":" + std::to_string(line_no) + ": empty macro-discipline");
        map.nodes.push_back(std::move(node));
    }
    if (map.nodes.empty()) throw ConfigError(name + ": no categories");
    return map;
}

enum class Scaling { AREA, RADIUS };

struct OverlayNode {
    const BasemapNode* basemap_node = nullptr;
    long long count = 0;
    double size = 0;  // normalized radius in (0, 1]; 0 iff count 0
};

struct Overlay {
    const Basemap* basemap = nullptr;
    Scaling scaling = Scaling::AREA;
    std::vector<OverlayNode> nodes;          // basemap order, zero counts kept
    std::vector<std::string> unmatched;      // corpus categories absent from the basemap, sorted
    long long max_count = 0;
};

// Projects category counts onto the basemap. Counts usually come from
// category_volume. Unmatched corpus categories are reported, never
// dropped; basemap categories without documents stay with size 0.
inline Overlay project_overlay(const std::vector<CategoryVolume>& category_counts,
                               const Basemap& basemap, Scaling scaling = Scaling::AREA) {
    std::map<std::string, long long> by_key;
    std::map<std::string, std::string> display;
    for (const auto& v : category_counts) {
        const std::string key = detail::category_key(v.category);
        by_key[key] += v.count;
        display.emplace(key, v.category);
    }

    Overlay overlay;
    overlay.basemap = &basemap;
    overlay.scaling = scaling;

    std::set<std::string> matched_keys;
    for (const auto& node : basemap.nodes) {
        OverlayNode on;
        on.basemap_node = &node;
        const std::string key = detail::category_key(node.label);
        auto it = by_key.find(key);
        if (it != by_key.end()) {
            on.count = it->second;
            matched_keys.insert(key);
        }
        overlay.max_count = std::max(overlay.max_count, on.count);
        overlay.nodes.push_back(on);
    }
    if (overlay.max_count <= 0)
        throw std::invalid_argument("project_overlay: no nonzero category counts to project");

    for (auto& on : overlay.nodes) {
        if (on.count <= 0) continue;
        const double ratio = static_cast<double>(on.count) / static_cast<double>(overlay.max_count);
        on.size = scaling == Scaling::AREA ? std::sqrt(ratio) : ratio;
    }

    for (const auto& [key, _] : by_key)
        if (matched_keys.find(key) == matched_keys.end())
            overlay.unmatched.push_back(display.at(key));
    std::sort(overlay.unmatched.begin(), overlay.unmatched.end());
    return overlay;
}

struct PajekOverlay {
    std::string net;  // vertices with normalized coordinates, empty *Edges
    std::string vec;  // parallel size vector
};

namespace detail {

struct CoordRange {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

inline CoordRange coord_range(const Basemap& basemap) {
    CoordRange r;
    bool first = true;
    for (const auto& node : basemap.nodes) {
        if (first) {
            r.min_x = r.max_x = node.x;
            r.min_y = r.max_y = node.y;
            first = false;
        } else {
            r.min_x = std::min(r.min_x, node.x);
            r.max_x = std::max(r.max_x, node.x);
            r.min_y = std::min(r.min_y, node.y);
            r.max_y = std::max(r.max_y, node.y);
        }
    }
    return r;
}

inline double norm_coord(double v, double lo, double hi) {
    return hi > lo ? (v - lo) / (hi - lo) : 0.5;
}

} // namespace detail

// Pajek pair: .net carries positions (min-max normalized to [0,1]) and the
// .vec carries one normalized size per vertex, zeros included.
inline PajekOverlay export_overlay_pajek(const Overlay& overlay) {
    const auto range = detail::coord_range(*overlay.basemap);
    PajekOverlay out;
    out.net = "*Vertices " + std::to_string(overlay.nodes.size()) + "\n";
    out.vec = "*Vertices " + std::to_string(overlay.nodes.size()) + "\n";
    for (std::size_t i = 0; i < overlay.nodes.size(); ++i) {
        const auto& node = overlay.nodes[i];
        out.net += std::to_string(i + 1);
        out.net += " \"";
        out.net += node.basemap_node->label;
        out.net += "\" ";
        out.net += format_fixed(detail::norm_coord(node.basemap_node->x, range.min_x, range.max_x), 4);
        out.net += ' ';
        out.net += format_fixed(detail::norm_coord(node.basemap_node->y, range.min_y, range.max_y), 4);
        out.net += '\n';
        out.vec += format_fixed(node.size, 4);
        out.vec += '\n';
    }
    out.net += "*Edges\n";
    return out;
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace detail

// Standalone SVG: one circle per nonzero node at its basemap position,
// fill keyed by macro-discipline color, labels on the top-N nodes by
// count. Deterministic: byte-identical for identical overlays.
inline std::string export_overlay_svg(const Overlay& overlay, int label_top_n = 20) {
    constexpr double kWidth = 1000, kHeight = 800, kMargin = 60;
    constexpr double kMaxRadius = 30;  // pixels for the size-1 node

    const auto range = detail::coord_range(*overlay.basemap);
    auto px = [&](double x) {
        return kMargin + detail::norm_coord(x, range.min_x, range.max_x) * (kWidth - 2 * kMargin);
    };
    auto py = [&](double y) {  // SVG y axis grows downward
        return kHeight - kMargin
               - detail::norm_coord(y, range.min_y, range.max_y) * (kHeight - 2 * kMargin);
    };

    // top-N by count, ties broken by label
    std::vector<const OverlayNode*> nonzero;
    for (const auto& node : overlay.nodes)
        if (node.count > 0) nonzero.push_back(&node);
    std::vector<const OverlayNode*> by_count = nonzero;
    std::sort(by_count.begin(), by_count.end(), [](const OverlayNode* a, const OverlayNode* b) {
        if (a->count != b->count) return a->count > b->count;
        return a->basemap_node->label < b->basemap_node->label;
    });
    std::set<const OverlayNode*> labeled;
    for (std::size_t i = 0; i < by_count.size() && static_cast<int>(i) < label_top_n; ++i)
        labeled.insert(by_count[i]);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_fixed(kWidth, 0)
           + "\" height=\"" + format_fixed(kHeight, 0) + "\" viewBox=\"0 0 "
           + format_fixed(kWidth, 0) + " " + format_fixed(kHeight, 0) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const OverlayNode* node : nonzero) {
        svg += "<circle cx=\"" + format_fixed(px(node->basemap_node->x), 2) + "\" cy=\""
               + format_fixed(py(node->basemap_node->y), 2) + "\" r=\""
               + format_fixed(node->size * kMaxRadius, 2) + "\" fill=\""
               + detail::xml_escape(node->basemap_node->color)
               + "\" fill-opacity=\"0.75\" stroke=\"#444444\" stroke-width=\"0.5\"/>\n";
    }
    for (const OverlayNode* node : nonzero) {
        if (labeled.find(node) == labeled.end()) continue;
        svg += "<text x=\"" + format_fixed(px(node->basemap_node->x), 2) + "\" y=\""
               + format_fixed(py(node->basemap_node->y) - node->size * kMaxRadius - 3, 2)
               + "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
               + detail::xml_escape(node->basemap_node->label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace biblioscope
