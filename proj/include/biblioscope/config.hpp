#pragma once

/* Run configuration: which lexicon / region / rule / basemap files to use
   and the mode flags. Sources, in increasing precedence: built-in
   defaults, the file named by BIBLIOSCOPE_CONFIG (or --config), then
   command-line flags. Referenced files must exist and load cleanly before
   any work starts. */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "biblioscope/builtin_config.hpp"
#include "biblioscope/collab.hpp"
#include "biblioscope/errors.hpp"
#include "biblioscope/geography.hpp"
#include "biblioscope/overlay.hpp"
#include "biblioscope/publisher.hpp"
#include "biblioscope/text.hpp"

namespace biblioscope {

inline constexpr const char* kConfigEnvVar = "BIBLIOSCOPE_CONFIG";

struct RunConfig {
    std::optional<std::filesystem::path> countries_map;
    std::optional<std::filesystem::path> regions_map;
    std::optional<std::filesystem::path> publisher_rules;
    std::optional<std::filesystem::path> basemap;
    PairCounting pair_counting = PairCounting::DISTINCT_COUNTRIES;
    Scaling scaling = Scaling::AREA;
    int svg_labels = 20;
    std::optional<std::filesystem::path> out_dir;
};

// Parses the key=value config file. Unknown keys are config errors;
// referenced paths are resolved relative to the config file's directory.
inline RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    const auto base = path.parent_path();

    auto resolve = [&](const std::string& value) {
        std::filesystem::path p = value;
        return p.is_absolute() || base.empty() ? p : base / p;
    };

    RunConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(line_no)
                              + ": expected key=value");
        const std::string key = trim(trimmed.substr(0, eq));
        const std::string value = trim(trimmed.substr(eq + 1));
        if (value.empty())
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": empty value for "
                              + key);
        if (key == "countries_map") config.countries_map = resolve(value);
        else if (key == "regions_map") config.regions_map = resolve(value);
        else if (key == "publisher_rules") config.publisher_rules = resolve(value);
        else if (key == "basemap") config.basemap = resolve(value);
        else if (key == "out_dir") config.out_dir = resolve(value);
        else if (key == "pair_multiplicity") {
            const std::string v = to_lower_ascii(value);
            if (v == "true" || v == "1" || v == "yes")
                config.pair_counting = PairCounting::ADDRESS_MULTIPLICITY;
            else if (v == "false" || v == "0" || v == "no")
                config.pair_counting = PairCounting::DISTINCT_COUNTRIES;
            else
                throw ConfigError(path.string() + ":" + std::to_string(line_no)
                                  + ": pair_multiplicity must be true or false");
        } else if (key == "scaling") {
            const std::string v = to_lower_ascii(value);
            if (v == "area") config.scaling = Scaling::AREA;
            else if (v == "radius") config.scaling = Scaling::RADIUS;
            else
                throw ConfigError(path.string() + ":" + std::to_string(line_no)
                                  + ": scaling must be area or radius");
        } else if (key == "svg_labels") {
            try {
                config.svg_labels = std::stoi(value);
            } catch (const std::exception&) {
                throw ConfigError(path.string() + ":" + std::to_string(line_no)
                                  + ": svg_labels must be an integer");
            }
            if (config.svg_labels < 0)
                throw ConfigError(path.string() + ":" + std::to_string(line_no)
                                  + ": svg_labels must be >= 0");
        } else {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": unknown key '"
                              + key + "'");
        }
    }
    return config;
}

// Config from BIBLIOSCOPE_CONFIG when set, defaults otherwise.
inline RunConfig load_env_config() {
    const char* path = std::getenv(kConfigEnvVar);
    if (path == nullptr || *path == '\0') return RunConfig{};
    return load_run_config(path);
}

// Loaded, validated working set derived from a RunConfig.
struct LoadedConfig {
    CountryLexicon lexicon;
    RegionMap regions;
    std::vector<RootRule> publisher_rules;
    std::optional<Basemap> basemap;
    std::string countries_hash;  // of the file bytes (or builtin text)
    std::string regions_hash;
    PairCounting pair_counting = PairCounting::DISTINCT_COUNTRIES;
    Scaling scaling = Scaling::AREA;
    int svg_labels = 20;
};

namespace detail {

inline std::string load_text_or(const std::optional<std::filesystem::path>& path,
                                std::string_view builtin, std::string* name_out) {
    if (!path) {
        *name_out = "<builtin>";
        return std::string(builtin);
    }
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path->string());
    std::ostringstream ss;
    ss << in.rdbuf();
    *name_out = path->string();
    return ss.str();
}

} // namespace detail

// Loads and cross-validates everything the pipeline needs. Throws
// ConfigError on any problem; nothing is half-loaded on failure.
inline LoadedConfig load_config(const RunConfig& config) {
    LoadedConfig loaded;
    std::string name;

    const std::string countries_text =
        detail::load_text_or(config.countries_map, kBuiltinCountriesMap, &name);
    {
        std::istringstream in(countries_text);
        loaded.lexicon = load_country_lexicon(in, name);
    }
    loaded.countries_hash = hex64(fnv1a64(countries_text));

    const std::string regions_text =
        detail::load_text_or(config.regions_map, kBuiltinRegionsMap, &name);
    {
        std::istringstream in(regions_text);
        loaded.regions = load_region_map(in, name);
    }
    loaded.regions_hash = hex64(fnv1a64(regions_text));

    validate_geography(loaded.lexicon, loaded.regions);

    const std::string rules_text =
        detail::load_text_or(config.publisher_rules, kBuiltinPublisherRules, &name);
    {
        std::istringstream in(rules_text);
        loaded.publisher_rules = load_publisher_rules(in, name);
    }

    if (config.basemap) {
        std::ifstream in(*config.basemap, std::ios::binary);
        if (!in) throw ConfigError("cannot read " + config.basemap->string());
        loaded.basemap = load_basemap(in, config.basemap->string());
    }

    loaded.pair_counting = config.pair_counting;
    loaded.scaling = config.scaling;
    loaded.svg_labels = config.svg_labels;
    return loaded;
}

} // namespace biblioscope
