#pragma once

/* Country resolution from affiliation addresses and the country -> region
   aggregation used by the collaboration indicators.

   Both tables are plain data: `countries.map` (ALIAS<TAB>COUNTRY) and
   `regions.map` (COUNTRY<TAB>REGION), '#' comments allowed. Alias lookup is
   accent- and case-insensitive. The region map must be total over the
   lexicon's countries; that is checked when the pair is loaded together,
   so lookups never fail later. */

#include <array>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biblioscope/errors.hpp"
#include "biblioscope/text.hpp"

namespace biblioscope {

// Order matters: enum order equals lexicographic order of the display
// labels, so canonical pair keys can compare enums directly.
enum class Region { AFRICA, ASIA, EUROPE, LAC, OCEANIA, USA_CANADA };

inline constexpr std::array<Region, 6> kAllRegions = {
    Region::AFRICA, Region::ASIA, Region::EUROPE,
    Region::LAC,    Region::OCEANIA, Region::USA_CANADA};

inline std::string region_label(Region r) {
    switch (r) {
        case Region::AFRICA: return "Africa";
        case Region::ASIA: return "Asia";
        case Region::EUROPE: return "Europe";
        case Region::LAC: return "LAC";
        case Region::OCEANIA: return "Oceania";
        case Region::USA_CANADA: return "USA&Canada";
    }
    return "?";
}

inline std::string region_token(Region r) {
    switch (r) {
        case Region::AFRICA: return "AFRICA";
        case Region::ASIA: return "ASIA";
        case Region::EUROPE: return "EUROPE";
        case Region::LAC: return "LAC";
        case Region::OCEANIA: return "OCEANIA";
        case Region::USA_CANADA: return "USA_CANADA";
    }
    return "?";
}

inline std::optional<Region> parse_region_token(std::string_view s) {
    for (Region r : kAllRegions)
        if (region_token(r) == s) return r;
    return std::nullopt;
}

// Alias table mapping folded alias forms to canonical country names.
class CountryLexicon {
public:
    void add_alias(std::string_view alias, std::string_view country) {
        aliases_[fold_accents(collapse_spaces(alias))] = std::string(country);
        countries_[std::string(country)] = true;
    }

    std::optional<std::string> lookup(std::string_view alias) const {
        auto it = aliases_.find(fold_accents(collapse_spaces(alias)));
        if (it == aliases_.end()) return std::nullopt;
        return it->second;
    }

    bool has_country(std::string_view country) const {
        return countries_.count(std::string(country)) > 0;
    }

    std::vector<std::string> countries() const {
        std::vector<std::string> out;
        out.reserve(countries_.size());
        for (const auto& [name, _] : countries_) out.push_back(name);
        return out;
    }

    std::size_t alias_count() const { return aliases_.size(); }

private:
    std::map<std::string, std::string> aliases_;
    std::map<std::string, bool> countries_;
};

class RegionMap {
public:
    void add(std::string_view country, Region region) {
        entries_[std::string(country)] = region;
    }

    // Total lookup; countries are validated against the map at load time.
    Region region_of(std::string_view country) const {
        auto it = entries_.find(std::string(country));
        if (it == entries_.end())
            throw ConfigError("country not covered by region map: " + std::string(country));
        return it->second;
    }

    bool contains(std::string_view country) const {
        return entries_.count(std::string(country)) > 0;
    }

    // Countries assigned to one region, sorted by name.
    std::vector<std::string> countries_in(Region region) const {
        std::vector<std::string> out;
        for (const auto& [country, r] : entries_)
            if (r == region) out.push_back(country);
        return out;
    }

    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, Region> entries_;
};

inline Region region_of(const std::string& country, const RegionMap& map) {
    return map.region_of(country);
}

namespace detail {

// Shared reader for the two-column tab-separated config tables.
inline void for_each_config_row(std::istream& in, const std::string& name,
                                const std::function<void(std::string, std::string, std::size_t)>& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && starts_with(line, "\xEF\xBB\xBF")) line.erase(0, 3);
        std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": expected two tab-separated columns");
        std::string left = trim(line.substr(0, tab));
        std::string right = trim(line.substr(tab + 1));
        if (left.empty() || right.empty())
            throw ConfigError(name + ":" + std::to_string(line_no) + ": empty column");
        fn(std::move(left), std::move(right), line_no);
    }
}

} // namespace detail

inline CountryLexicon load_country_lexicon(std::istream& in, const std::string& name = "countries.map") {
    CountryLexicon lex;
    detail::for_each_config_row(in, name, [&](std::string alias, std::string country, std::size_t) {
        lex.add_alias(alias, country);
    });
    if (lex.alias_count() == 0) throw ConfigError(name + ": no entries");
    return lex;
}

inline RegionMap load_region_map(std::istream& in, const std::string& name = "regions.map") {
    RegionMap map;
    detail::for_each_config_row(in, name, [&](std::string country, std::string token, std::size_t line_no) {
        auto region = parse_region_token(token);
        if (!region)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": unknown region '" + token + "'");
        map.add(country, *region);
    });
    if (map.size() == 0) throw ConfigError(name + ": no entries");
    return map;
}

// The pair is only valid together: every country the lexicon can produce
// must have a region.
inline void validate_geography(const CountryLexicon& lex, const RegionMap& map) {
    for (const auto& country : lex.countries())
        if (!map.contains(country))
            throw ConfigError("region map misses country '" + country + "' present in the lexicon");
}

// Resolves an address to a canonical country, or nullopt when no alias
// matches. The last comma-separated token decides; a final "... USA" word
// handles the state+ZIP form that omits the comma before the country.
inline std::optional<std::string> extract_country(std::string_view raw_address,
                                                  const CountryLexicon& lexicon) {
    std::string addr = trim(raw_address);
    while (!addr.empty() && addr.back() == '.') {
        addr.pop_back();
        addr = trim_right(addr);
    }
    if (addr.empty()) return std::nullopt;

    auto comma = addr.rfind(',');
    std::string token = comma == std::string::npos ? addr : addr.substr(comma + 1);
    token = trim(token);
    if (token.empty()) return std::nullopt;

    if (auto hit = lexicon.lookup(token)) return hit;

    // terminal word, for "Cambridge, MA 02138 USA" style endings
    auto space = token.rfind(' ');
    if (space != std::string::npos) {
        if (auto hit = lexicon.lookup(trim(token.substr(space + 1)))) return hit;
    }
    return std::nullopt;
}

} // namespace biblioscope
