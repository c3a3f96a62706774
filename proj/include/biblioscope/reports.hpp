#pragma once

/* The ingest pipeline and the eight report generators. The CLI is a thin
   wrapper over these functions, so tests drive exactly the code the tool
   runs. All outputs are deterministic; ingest parallelism merges per-file
   results in argument order before the store is written. */

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "biblioscope/collab.hpp"
#include "biblioscope/config.hpp"
#include "biblioscope/corpus.hpp"
#include "biblioscope/errors.hpp"
#include "biblioscope/indicators.hpp"
#include "biblioscope/overlay.hpp"
#include "biblioscope/publisher.hpp"
#include "biblioscope/store.hpp"
#include "biblioscope/tagfile.hpp"

namespace biblioscope {

struct IngestSummary {
    std::size_t n_records = 0;    // parsed tagged records
    std::size_t n_documents = 0;  // stored documents
    std::size_t n_warnings = 0;
    std::size_t n_errors = 0;
};

namespace detail {

struct FileIngest {
    Corpus docs;
    std::vector<ParseDiagnostic> diagnostics;
    std::size_t n_records = 0;
};

inline FileIngest ingest_file(const std::filesystem::path& path, Origin origin,
                              const CountryLexicon& lexicon) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read input file " + path.string());
    ParseResult parsed = parse_stream(in, origin, path.string());

    FileIngest out;
    out.n_records = parsed.records.size();
    out.diagnostics = std::move(parsed.diagnostics);
    out.docs.reserve(parsed.records.size());
    for (const auto& record : parsed.records) {
        auto doc = build_document(record, lexicon, out.diagnostics);
        if (!doc) continue;
        link_authors_addresses(*doc, &out.diagnostics);
        out.docs.push_back(std::move(*doc));
    }
    return out;
}

} // namespace detail

// Parse -> build -> link -> persist. Files may be processed concurrently
// (`jobs` > 1); results merge in argument order, so the store bytes do not
// depend on the thread count. Re-ingesting identical inputs rewrites an
// identical store.
inline IngestSummary run_ingest(const std::vector<std::filesystem::path>& inputs, Origin origin,
                                const std::filesystem::path& store_dir, const LoadedConfig& config,
                                unsigned jobs = 1) {
    if (inputs.empty()) throw UsageError("ingest: no input files");

    std::vector<detail::FileIngest> per_file(inputs.size());
    if (jobs <= 1 || inputs.size() == 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            per_file[i] = detail::ingest_file(inputs[i], origin, config.lexicon);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(inputs.size());
        std::size_t next = 0;
        std::mutex mutex;
        const unsigned n_workers = std::min<unsigned>(jobs, static_cast<unsigned>(inputs.size()));
        for (unsigned w = 0; w < n_workers; ++w) {
            workers.emplace_back([&]() {
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lock(mutex);
                        if (next >= inputs.size()) return;
                        i = next++;
                    }
                    try {
                        per_file[i] = detail::ingest_file(inputs[i], origin, config.lexicon);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    Corpus corpus;
    std::vector<ParseDiagnostic> diagnostics;
    IngestSummary summary;
    std::set<std::string> seen_ids;
    for (std::size_t i = 0; i < per_file.size(); ++i) {
        summary.n_records += per_file[i].n_records;
        for (auto& doc : per_file[i].docs) {
            if (!seen_ids.insert(doc.doc_id).second) {
                diagnostics.push_back({Severity::WARNING,
                                       "duplicate document id " + doc.doc_id + "; record dropped",
                                       doc.source_location});
                continue;
            }
            corpus.push_back(std::move(doc));
        }
        for (auto& d : per_file[i].diagnostics) diagnostics.push_back(std::move(d));
    }

    if (corpus.empty()) {
        std::string names;
        for (const auto& p : inputs) {
            if (!names.empty()) names += ", ";
            names += p.string();
        }
        throw InputError("no documents ingested from: " + names);
    }

    for (const auto& d : diagnostics)
        (d.severity == Severity::ERROR ? summary.n_errors : summary.n_warnings) += 1;
    summary.n_documents = corpus.size();

    write_store(store_dir, std::move(corpus), diagnostics, origin, config.countries_hash,
                config.regions_hash);
    return summary;
}

enum class ReportKind { STATS, COUNTRIES, PUBLISHERS, PAIRS, GRAPH, OVERLAY, CATEGORIES, CROSSRANK };

inline std::optional<ReportKind> parse_report_name(std::string_view name) {
    const std::string n = to_lower_ascii(name);
    if (n == "stats") return ReportKind::STATS;
    if (n == "countries") return ReportKind::COUNTRIES;
    if (n == "publishers") return ReportKind::PUBLISHERS;
    if (n == "pairs") return ReportKind::PAIRS;
    if (n == "graph") return ReportKind::GRAPH;
    if (n == "overlay") return ReportKind::OVERLAY;
    if (n == "categories") return ReportKind::CATEGORIES;
    if (n == "crossrank") return ReportKind::CROSSRANK;
    return std::nullopt;
}

// --- table renderers ------------------------------------------------------
// Shapes mirror the published exhibits; means and shares print with 2
// decimals, fractional credit with 4.

inline std::string render_stats_tsv(const Corpus& corpus) {
    std::string out = "Attribute\tN\t\xCE\xBC\t\xCF\x83\n";  // mu, sigma
    for (Attribute attr : kAllAttributes) {
        const auto s = summarize_attribute(corpus, attr);
        out += attribute_label(attr) + '\t' + format_fixed(s.total, 0) + '\t'
               + format_fixed(s.mean, 2) + '\t' + format_fixed(s.stddev, 2) + '\n';
    }
    return out;
}

inline std::string render_countries_tsv(const std::vector<CountryProduction>& rows) {
    std::string out = "Country\tRecords\tFractional\tFirst author\n";
    for (const auto& row : rows)
        out += row.country + '\t' + std::to_string(row.records) + '\t'
               + format_fixed(row.fractional, 4) + '\t' + std::to_string(row.first_author) + '\n';
    return out;
}

inline std::string render_publishers_tsv(const PublisherProfile& profile) {
    std::string out = "Semantic root\tClass\tJournals\t%\n";
    for (const auto& row : profile.rows)
        out += row.root_label + '\t' + publisher_class_label(row.cls) + '\t'
               + std::to_string(row.journals) + '\t' + format_fixed(row.percent, 2) + '\n';
    const double unclassified_pct =
        profile.total_journals == 0
            ? 0.0
            : 100.0 * static_cast<double>(profile.unclassified)
                  / static_cast<double>(profile.total_journals);
    out += "Unclassified\t-\t" + std::to_string(profile.unclassified) + '\t'
           + format_fixed(unclassified_pct, 2) + '\n';
    out += "Total journals\t-\t" + std::to_string(profile.total_journals) + "\t100.00\n";
    return out;
}

inline std::string render_pairs_tsv(const RegionPairTally& tally) {
    std::vector<std::pair<std::uint64_t, std::string>> rows;
    for (const auto& [pair, count] : tally.counts)
        if (count > 0) rows.push_back({count, pair.label()});
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::string out = "Rank\tNumber\tCollaboration\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        out += std::to_string(i + 1) + '\t' + std::to_string(rows[i].first) + '\t' + rows[i].second
               + '\n';
    // the footnote of the published tables
    if (tally.unresolved_addresses > 0)
        out += "# address records with undetermined country: "
               + std::to_string(tally.unresolved_addresses) + '\n';
    return out;
}

inline std::string render_categories_tsv(const std::vector<CategoryVolume>& volumes) {
    std::string out = "Rank\tN\t%\tCategory\n";
    for (const auto& v : volumes)
        out += std::to_string(v.rank) + '\t' + std::to_string(v.count) + '\t'
               + format_fixed(100.0 * v.share, 2) + '\t' + v.category + '\n';
    return out;
}

inline std::string render_crossrank_tsv(const std::vector<CrossRankRow>& rows) {
    std::string out = "Rank\tN\t%\tRank2\tN2\t%2\tCategory\n";
    auto cell = [](const std::optional<CategoryVolume>& v, int what) -> std::string {
        if (!v) return "-";
        switch (what) {
            case 0: return std::to_string(v->rank);
            case 1: return std::to_string(v->count);
            default: return format_fixed(100.0 * v->share, 2);
        }
    };
    for (const auto& row : rows)
        out += cell(row.a, 0) + '\t' + cell(row.a, 1) + '\t' + cell(row.a, 2) + '\t'
               + cell(row.b, 0) + '\t' + cell(row.b, 1) + '\t' + cell(row.b, 2) + '\t'
               + row.category + '\n';
    return out;
}

// ---------------------------------------------------------------------------

struct ReportRequest {
    ReportKind kind = ReportKind::STATS;
    std::filesystem::path store;
    std::optional<std::filesystem::path> store2;  // CROSSRANK only
    std::filesystem::path out_dir;
    bool lac_only = true;  // COUNTRIES: restrict to the LAC region
};

// Runs one report against a store and writes its output files. Returns the
// paths written.
inline std::vector<std::filesystem::path> run_report(const ReportRequest& request,
                                                     const LoadedConfig& config) {
    Corpus corpus = load_store(request.store);
    std::filesystem::create_directories(request.out_dir);

    std::vector<std::filesystem::path> written;
    auto emit = [&](const char* name, const std::string& content) {
        const auto path = request.out_dir / name;
        detail::write_file(path, content);
        written.push_back(path);
    };

    switch (request.kind) {
        case ReportKind::STATS: {
            emit("stats.tsv", render_stats_tsv(corpus));
            break;
        }
        case ReportKind::COUNTRIES: {
            std::vector<std::vector<std::vector<std::string>>> links;
            links.reserve(corpus.size());
            for (auto& doc : corpus) links.push_back(link_authors_addresses(doc));
            for (const auto& doc : corpus)
                for (const auto& aff : doc.affiliations)
                    if (aff.country && !config.regions.contains(*aff.country))
                        throw ConfigError("region map misses country '" + *aff.country
                                          + "' present in store " + request.store.string());
            const auto rows = country_production(
                corpus, links,
                request.lac_only ? std::optional<Region>(Region::LAC) : std::nullopt,
                &config.regions);
            emit("countries.tsv", render_countries_tsv(rows));
            break;
        }
        case ReportKind::PUBLISHERS: {
            emit("publishers.tsv", render_publishers_tsv(publisher_profile(corpus, config.publisher_rules)));
            break;
        }
        case ReportKind::PAIRS: {
            const auto tally = count_region_pairs(corpus, config.regions, config.pair_counting);
            emit("pairs.tsv", render_pairs_tsv(tally));
            break;
        }
        case ReportKind::GRAPH: {
            emit("collab.net", export_pajek(build_collab_graph(corpus, config.regions)));
            break;
        }
        case ReportKind::OVERLAY: {
            if (!config.basemap)
                throw ConfigError("overlay report needs a basemap (config key 'basemap' or --basemap)");
            const auto overlay =
                project_overlay(category_volume(corpus), *config.basemap, config.scaling);
            const auto pajek = export_overlay_pajek(overlay);
            emit("overlay.net", pajek.net);
            emit("overlay.vec", pajek.vec);
            emit("overlay.svg", export_overlay_svg(overlay, config.svg_labels));
            std::string unmatched = "category\n";
            for (const auto& label : overlay.unmatched) unmatched += tsv_escape(label) + '\n';
            emit("overlay_unmatched.tsv", unmatched);
            break;
        }
        case ReportKind::CATEGORIES: {
            emit("categories.tsv", render_categories_tsv(category_volume(corpus)));
            break;
        }
        case ReportKind::CROSSRANK: {
            if (!request.store2)
                throw UsageError("crossrank needs two stores (--store and --store2)");
            Corpus other = load_store(*request.store2);
            emit("crossrank.tsv",
                 render_crossrank_tsv(cross_rank(category_volume(corpus), category_volume(other))));
            break;
        }
    }
    return written;
}

} // namespace biblioscope
