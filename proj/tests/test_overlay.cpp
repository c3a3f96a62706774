#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "biblioscope/overlay.hpp"
#include "support/test_util.hpp"

using namespace biblioscope;

namespace {

Basemap parse_basemap(const std::string& text) {
    std::istringstream in(text);
    return load_basemap(in, "basemap.tsv");
}

std::vector<CategoryVolume> counts(const std::vector<std::pair<std::string, long long>>& pairs) {
    std::vector<CategoryVolume> out;
    for (const auto& [label, count] : pairs) {
        CategoryVolume v;
        v.category = label;
        v.count = count;
        out.push_back(v);
    }
    return out;
}

const std::string kSmallMap =
    "Alpha\t0\t0\tMacro One\t#ff0000\n"
    "Beta\t10\t5\tMacro One\t#ff0000\n"
    "Gamma\t-3\t8\tMacro Two\t#0000ff\n";

} // namespace

TEST_CASE("a three-line basemap loads three categories") {
    const auto map = parse_basemap(kSmallMap);
    REQUIRE(map.size() == 3);
    CHECK(map.nodes[0].label == "Alpha");
    CHECK(map.nodes[2].x == -3.0);
    CHECK(map.find("beta") != nullptr);  // case-insensitive match
    CHECK(map.find("Delta") == nullptr);
}

TEST_CASE("duplicate labels and bad coordinates are load errors naming the line") {
    try {
        parse_basemap("Zoology\t1\t2\tM\t#fff\nZoology\t3\t4\tM\t#fff\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
        CHECK(std::string(e.what()).find("Zoology") != std::string::npos);
    }
    try {
        parse_basemap("Alpha\t1\t2\tM\t#fff\nBeta\tx\t4\tM\t#fff\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_basemap("Alpha\t1\t2\tM\n"), ConfigError);
    CHECK_THROWS_AS(parse_basemap(""), ConfigError);
}

TEST_CASE("a 224-category basemap loads and round-trips") {
    std::string text;
    for (int i = 0; i < 224; ++i)
        text += "Category " + std::to_string(i) + "\t" + std::to_string(i % 17) + "\t"
                + std::to_string(i % 13) + "\tMacro " + std::to_string(i % 19) + "\t#abcdef\n";
    const auto map = parse_basemap(text);
    CHECK(map.size() == 224);
    for (int i = 0; i < 224; ++i)
        REQUIRE(map.find("Category " + std::to_string(i)) != nullptr);
}

TEST_CASE("AREA scaling keeps rendered area proportional to counts") {
    const auto map = parse_basemap(kSmallMap);
    const auto overlay = project_overlay(counts({{"Alpha", 10}, {"Beta", 5}}), map, Scaling::AREA);
    const double area_a = overlay.nodes[0].size * overlay.nodes[0].size;
    const double area_b = overlay.nodes[1].size * overlay.nodes[1].size;
    CHECK(std::fabs(area_a / area_b - 2.0) < 1e-12);
    CHECK(overlay.nodes[0].size == 1.0);  // max node has the reference size
    CHECK(overlay.nodes[2].size == 0.0);  // zero count, size zero
    CHECK(overlay.nodes[2].count == 0);
}

TEST_CASE("RADIUS scaling keeps the radius proportional to counts") {
    const auto map = parse_basemap(kSmallMap);
    const auto overlay =
        project_overlay(counts({{"Alpha", 10}, {"Beta", 5}}), map, Scaling::RADIUS);
    CHECK(std::fabs(overlay.nodes[0].size / overlay.nodes[1].size - 2.0) < 1e-12);
}

TEST_CASE("unmatched corpus categories are listed, never dropped") {
    const auto map = parse_basemap(kSmallMap);
    const auto overlay = project_overlay(
        counts({{"Alpha", 3}, {"Engineering, Aerospace", 7}, {"Zeta", 1}}), map);
    CHECK(overlay.unmatched == std::vector<std::string>{"Engineering, Aerospace", "Zeta"});
    // matched + unmatched covers every distinct corpus category
    CHECK(overlay.unmatched.size() + 1 == 3);
}

TEST_CASE("doubling every count leaves the normalized overlay unchanged") {
    const auto map = parse_basemap(kSmallMap);
    const auto once = project_overlay(counts({{"Alpha", 10}, {"Beta", 5}, {"Gamma", 2}}), map);
    const auto twice = project_overlay(counts({{"Alpha", 20}, {"Beta", 10}, {"Gamma", 4}}), map);
    for (std::size_t i = 0; i < once.nodes.size(); ++i)
        CHECK(once.nodes[i].size == twice.nodes[i].size);
}

TEST_CASE("pairwise size ratios follow the scaling contract on random counts") {
    testutil::Rng rng(60601);
    std::string text;
    for (int i = 0; i < 40; ++i)
        text += "Cat" + std::to_string(i) + "\t" + std::to_string((i * 37) % 101) + "\t"
                + std::to_string((i * 53) % 89) + "\tM" + std::to_string(i % 19) + "\t#123456\n";
    const auto map = parse_basemap(text);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<std::string, long long>> pairs;
        for (int i = 0; i < 40; ++i)
            if (rng.chance(0.7)) pairs.push_back({"Cat" + std::to_string(i), rng.range(1, 5000)});
        if (pairs.empty()) continue;
        const auto area = project_overlay(counts(pairs), map, Scaling::AREA);
        const auto radius = project_overlay(counts(pairs), map, Scaling::RADIUS);
        for (std::size_t i = 0; i < area.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < area.nodes.size(); ++j) {
                const auto& ai = area.nodes[i];
                const auto& aj = area.nodes[j];
                if (ai.count == 0 || aj.count == 0) continue;
                const double count_ratio = double(ai.count) / double(aj.count);
                CHECK(std::fabs((ai.size * ai.size) / (aj.size * aj.size) - count_ratio) <
                      1e-9 * count_ratio);
                const auto& ri = radius.nodes[i];
                const auto& rj = radius.nodes[j];
                CHECK(std::fabs(ri.size / rj.size - count_ratio) < 1e-9 * count_ratio);
            }
    }
}

TEST_CASE("all-zero counts cannot be projected") {
    const auto map = parse_basemap(kSmallMap);
    CHECK_THROWS_AS(project_overlay(counts({{"Alpha", 0}}), map), std::invalid_argument);
    CHECK_THROWS_AS(project_overlay({}, map), std::invalid_argument);
}

TEST_CASE("projection is independent of count order") {
    const auto map = parse_basemap(kSmallMap);
    const auto a = project_overlay(counts({{"Alpha", 4}, {"Beta", 9}}), map);
    const auto b = project_overlay(counts({{"Beta", 9}, {"Alpha", 4}}), map);
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        CHECK(a.nodes[i].count == b.nodes[i].count);
        CHECK(a.nodes[i].size == b.nodes[i].size);
    }
}

TEST_CASE("pajek export embeds coordinates and writes a parallel size vector") {
    const auto map = parse_basemap(kSmallMap);
    const auto overlay = project_overlay(counts({{"Alpha", 10}, {"Beta", 5}}), map);
    const auto pajek = export_overlay_pajek(overlay);
    const std::string expected_net =
        "*Vertices 3\n"
        "1 \"Alpha\" 0.2308 0.0000\n"
        "2 \"Beta\" 1.0000 0.6250\n"
        "3 \"Gamma\" 0.0000 1.0000\n"
        "*Edges\n";
    const std::string expected_vec =
        "*Vertices 3\n"
        "1.0000\n"
        "0.7071\n"
        "0.0000\n";
    CHECK(pajek.net == expected_net);
    CHECK(pajek.vec == expected_vec);
}

TEST_CASE("svg contains one circle per nonzero node and omits zero counts") {
    const auto map = parse_basemap(kSmallMap);
    const auto overlay = project_overlay(counts({{"Alpha", 10}, {"Beta", 5}}), map);
    const auto svg = export_overlay_svg(overlay);
    std::size_t circles = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 7;
    }
    CHECK(circles == 2);
    CHECK(svg.find("Gamma") == std::string::npos);  // zero-count node absent
    CHECK(svg.find("#ff0000") != std::string::npos);
}

TEST_CASE("svg labels only the top-N nodes") {
    std::string text;
    for (int i = 0; i < 30; ++i)
        text += "Cat" + std::to_string(i) + "\t" + std::to_string(i) + "\t0\tM\t#000\n";
    const auto map = parse_basemap(text);
    std::vector<std::pair<std::string, long long>> pairs;
    for (int i = 0; i < 30; ++i) pairs.push_back({"Cat" + std::to_string(i), i + 1});
    const auto overlay = project_overlay(counts(pairs), map);
    const auto svg = export_overlay_svg(overlay, 5);
    std::size_t labels = 0, pos = 0;
    while ((pos = svg.find("<text", pos)) != std::string::npos) {
        ++labels;
        pos += 5;
    }
    CHECK(labels == 5);
    CHECK(svg.find(">Cat29<") != std::string::npos);  // highest count is labeled
    CHECK(svg.find(">Cat0<") == std::string::npos);
}

TEST_CASE("identical overlays export byte-identical files") {
    const auto map = parse_basemap(kSmallMap);
    const auto overlay = project_overlay(counts({{"Alpha", 10}, {"Beta", 5}}), map);
    const auto overlay2 = project_overlay(counts({{"Alpha", 10}, {"Beta", 5}}), map);
    CHECK(export_overlay_pajek(overlay).net == export_overlay_pajek(overlay2).net);
    CHECK(export_overlay_pajek(overlay).vec == export_overlay_pajek(overlay2).vec);
    CHECK(export_overlay_svg(overlay) == export_overlay_svg(overlay2));
}

TEST_CASE("labels escape XML metacharacters") {
    const auto map = parse_basemap("R&D <Applied>\t1\t1\tM\t#000\nOther\t0\t0\tM\t#000\n");
    const auto overlay = project_overlay(counts({{"R&D <Applied>", 2}}), map);
    const auto svg = export_overlay_svg(overlay);
    CHECK(svg.find("R&amp;D &lt;Applied&gt;") != std::string::npos);
    CHECK(svg.find("R&D") == std::string::npos);
}
