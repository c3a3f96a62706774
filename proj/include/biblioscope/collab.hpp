#pragma once

/* Region-pair tallies and the country/region co-authorship graph, plus the
   Pajek text export. Pairs count unordered and once per document over the
   distinct resolved countries (the multiplicity mode counts per address
   pair instead). LAC countries stay individual graph nodes; all other
   countries collapse into their region's aggregate node. */

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "biblioscope/corpus.hpp"
#include "biblioscope/geography.hpp"
#include "biblioscope/text.hpp"

namespace biblioscope {

// Unordered region pair; `first <= second` (enum order is the
// lexicographic order of the display labels).
struct RegionPair {
    Region first = Region::AFRICA;
    Region second = Region::AFRICA;

    static RegionPair canonical(Region a, Region b) {
        return a <= b ? RegionPair{a, b} : RegionPair{b, a};
    }
    std::string label() const { return region_label(first) + "-" + region_label(second); }
    friend bool operator<(const RegionPair& a, const RegionPair& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    }
    friend bool operator==(const RegionPair& a, const RegionPair& b) {
        return a.first == b.first && a.second == b.second;
    }
};

struct RegionPairTally {
    std::map<RegionPair, std::uint64_t> counts;
    std::size_t unresolved_addresses = 0;  // address records with no country

    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (const auto& [_, c] : counts) sum += c;
        return sum;
    }
};

enum class PairCounting {
    DISTINCT_COUNTRIES,   // once per unordered country pair per document
    ADDRESS_MULTIPLICITY, // once per unordered address pair with differing countries
};

// Tallies co-occurring region pairs over the corpus. Same-region pairs can
// only come from two distinct countries of that region; a document with
// fewer than two distinct countries contributes nothing.
inline RegionPairTally count_region_pairs(const Corpus& corpus, const RegionMap& region_map,
                                          PairCounting mode = PairCounting::DISTINCT_COUNTRIES) {
    RegionPairTally tally;
    for (const auto& doc : corpus) {
        if (mode == PairCounting::DISTINCT_COUNTRIES) {
            const auto countries = document_country_set(doc, &tally.unresolved_addresses);
            for (std::size_t i = 0; i < countries.size(); ++i)
                for (std::size_t j = i + 1; j < countries.size(); ++j)
                    ++tally.counts[RegionPair::canonical(region_map.region_of(countries[i]),
                                                         region_map.region_of(countries[j]))];
        } else {
            const auto& affs = doc.affiliations;
            for (const auto& aff : affs)
                if (!aff.country) ++tally.unresolved_addresses;
            for (std::size_t i = 0; i < affs.size(); ++i) {
                if (!affs[i].country) continue;
                for (std::size_t j = i + 1; j < affs.size(); ++j) {
                    if (!affs[j].country || *affs[i].country == *affs[j].country) continue;
                    ++tally.counts[RegionPair::canonical(region_map.region_of(*affs[i].country),
                                                         region_map.region_of(*affs[j].country))];
                }
            }
        }
    }
    return tally;
}

struct CollabGraph {
    // node order: LAC countries alphabetical, then aggregate regions
    // alphabetical; fixed by the region map, not by the corpus
    std::vector<std::string> node_labels;
    std::vector<std::uint64_t> node_weights;            // document participation
    std::map<std::pair<int, int>, std::uint64_t> edges; // i < j, 0-based

    int node_index(const std::string& label) const {
        auto it = std::find(node_labels.begin(), node_labels.end(), label);
        return it == node_labels.end() ? -1 : static_cast<int>(it - node_labels.begin());
    }
};

// Co-authorship graph contrasting individual LAC countries with the five
// aggregate regions. Countries collapse after resolution, so two European
// countries on one document yield a single Europe endpoint.
inline CollabGraph build_collab_graph(const Corpus& corpus, const RegionMap& region_map) {
    CollabGraph graph;
    for (const auto& country : region_map.countries_in(Region::LAC))
        graph.node_labels.push_back(country);
    for (Region r : kAllRegions)
        if (r != Region::LAC) graph.node_labels.push_back(region_label(r));
    graph.node_weights.assign(graph.node_labels.size(), 0);

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < graph.node_labels.size(); ++i)
        index[graph.node_labels[i]] = static_cast<int>(i);

    for (const auto& doc : corpus) {
        std::vector<int> nodes;
        for (const auto& country : document_country_set(doc)) {
            const Region r = region_map.region_of(country);
            const std::string label = r == Region::LAC ? country : region_label(r);
            const int idx = index.at(label);
            if (std::find(nodes.begin(), nodes.end(), idx) == nodes.end()) nodes.push_back(idx);
        }
        for (int idx : nodes) ++graph.node_weights[static_cast<std::size_t>(idx)];
        std::sort(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                ++graph.edges[{nodes[i], nodes[j]}];
    }
    return graph;
}

// Pajek .net text: `*Vertices n` with quoted labels and sizes normalized
// by the maximum node weight, then `*Edges` with 1-based `i j w` lines.
inline std::string export_pajek(const CollabGraph& graph) {
    std::uint64_t max_weight = 0;
    for (auto w : graph.node_weights) max_weight = std::max(max_weight, w);

    std::string out = "*Vertices " + std::to_string(graph.node_labels.size()) + "\n";
    for (std::size_t i = 0; i < graph.node_labels.size(); ++i) {
        const double size =
            max_weight == 0 ? 0.0
                            : static_cast<double>(graph.node_weights[i]) / static_cast<double>(max_weight);
        out += std::to_string(i + 1);
        out += " \"";
        out += graph.node_labels[i];
        out += "\" ";
        out += format_fixed(size, 4);
        out += '\n';
    }
    out += "*Edges\n";
    for (const auto& [key, weight] : graph.edges) {
        out += std::to_string(key.first + 1);
        out += ' ';
        out += std::to_string(key.second + 1);
        out += ' ';
        out += std::to_string(weight);
        out += '\n';
    }
    return out;
}

} // namespace biblioscope
