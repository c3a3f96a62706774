#pragma once

/* On-disk corpus store: plain TSV tables plus a manifest, one directory
   per ingested corpus. Tables are sorted (documents by doc_id, child
   tables by doc_id + ordinal) so identical inputs always produce
   identical bytes. Cell values are tab/newline/backslash-escaped. */

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "biblioscope/corpus.hpp"
#include "biblioscope/errors.hpp"
#include "biblioscope/tagfile.hpp"
#include "biblioscope/text.hpp"

namespace biblioscope {

inline constexpr int kStoreFormatVersion = 1;
inline constexpr const char* kUnresolvedCell = "UNRESOLVED";

struct StoreManifest {
    int format_version = kStoreFormatVersion;
    Origin origin = Origin::WOS;
    std::string ingested_at;  // ISO-8601 UTC from SOURCE_DATE_EPOCH, else "unspecified"
    std::size_t n_documents = 0;
    std::size_t n_authorships = 0;
    std::size_t n_affiliations = 0;
    std::size_t n_categories = 0;
    std::size_t n_sources = 0;
    std::size_t n_diagnostics = 0;
    std::string countries_hash;
    std::string regions_hash;
};

namespace detail {

inline std::string severity_token(Severity s) {
    return s == Severity::ERROR ? "ERROR" : "WARNING";
}

inline std::optional<Severity> parse_severity(std::string_view s) {
    if (s == "ERROR") return Severity::ERROR;
    if (s == "WARNING") return Severity::WARNING;
    return std::nullopt;
}

// Deterministic timestamp: honors SOURCE_DATE_EPOCH so stores are
// byte-reproducible; without it the field stays "unspecified".
inline std::string ingest_timestamp() {
    const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
    if (epoch == nullptr || *epoch == '\0') return "unspecified";
    char* end = nullptr;
    const long long secs = std::strtoll(epoch, &end, 10);
    if (end == nullptr || *end != '\0') return "unspecified";
    const std::time_t t = static_cast<std::time_t>(secs);
    std::tm tm{};
    if (gmtime_r(&t, &tm) == nullptr) return "unspecified";
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("short write to " + path.string());
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::vector<std::string>> read_tsv_rows(const std::filesystem::path& path,
                                                           std::size_t n_cols) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(read_file(path));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (header) {  // header row is documentation, not data
            header = false;
            continue;
        }
        if (line.empty()) continue;
        auto cells = split(line, '\t');
        if (cells.size() != n_cols)
            throw InputError(path.string() + ": expected " + std::to_string(n_cols)
                             + " columns, got " + std::to_string(cells.size()));
        for (auto& c : cells) c = tsv_unescape(c);
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace detail

// Writes the full store. `corpus` is re-sorted by doc_id; diagnostics keep
// their given order.
inline void write_store(const std::filesystem::path& dir, Corpus corpus,
                        const std::vector<ParseDiagnostic>& diagnostics, Origin origin,
                        const std::string& countries_hash, const std::string& regions_hash) {
    std::filesystem::create_directories(dir);
    std::sort(corpus.begin(), corpus.end(),
              [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });

    std::string documents = "doc_id\torigin\tyear\ttitle\tsource_name\tpublisher\tdoc_type\t"
                            "language\ttimes_cited\tn_cited_refs\tsource_file\tsource_line\n";
    std::string authorships = "doc_id\tposition\traw_name\tnormalized_key\n";
    std::string affiliations = "doc_id\tseq\tcountry\tlinked_author_keys\traw_address\n";
    std::string categories = "doc_id\tseq\tcategory\n";
    std::size_t n_authorships = 0, n_affiliations = 0, n_categories = 0;

    // sources: folded name -> (display name, publisher, docs)
    std::map<std::string, std::tuple<std::string, std::string, long long>> sources;

    for (const auto& doc : corpus) {
        documents += tsv_escape(doc.doc_id) + '\t' + origin_token(doc.origin) + '\t'
                     + std::to_string(doc.year) + '\t' + tsv_escape(doc.title) + '\t'
                     + tsv_escape(doc.source_name) + '\t' + tsv_escape(doc.publisher) + '\t'
                     + tsv_escape(doc.doc_type) + '\t' + tsv_escape(doc.language) + '\t'
                     + std::to_string(doc.times_cited) + '\t' + std::to_string(doc.n_cited_refs)
                     + '\t' + tsv_escape(doc.source_location.file) + '\t'
                     + std::to_string(doc.source_location.line) + '\n';
        for (const auto& a : doc.authors) {
            authorships += tsv_escape(doc.doc_id) + '\t' + std::to_string(a.position) + '\t'
                           + tsv_escape(a.raw_name) + '\t' + tsv_escape(a.normalized_key) + '\n';
            ++n_authorships;
        }
        for (std::size_t i = 0; i < doc.affiliations.size(); ++i) {
            const auto& aff = doc.affiliations[i];
            affiliations += tsv_escape(doc.doc_id) + '\t' + std::to_string(i + 1) + '\t'
                            + (aff.country ? tsv_escape(*aff.country) : std::string(kUnresolvedCell))
                            + '\t' + tsv_escape(join(aff.linked_author_keys, ";")) + '\t'
                            + tsv_escape(aff.raw_address) + '\n';
            ++n_affiliations;
        }
        for (std::size_t i = 0; i < doc.categories.size(); ++i) {
            categories += tsv_escape(doc.doc_id) + '\t' + std::to_string(i + 1) + '\t'
                          + tsv_escape(doc.categories[i]) + '\n';
            ++n_categories;
        }
        if (!doc.source_name.empty()) {
            auto [it, inserted] = sources.emplace(
                detail::source_key(doc.source_name),
                std::make_tuple(doc.source_name, doc.publisher, 1ll));
            if (!inserted) {
                auto& [display, publisher, count] = it->second;
                ++count;
                if (publisher.empty() && !doc.publisher.empty()) publisher = doc.publisher;
            }
        }
    }

    std::string sources_tsv = "source_name\tpublisher\tn_docs\n";
    for (const auto& [_, entry] : sources) {
        const auto& [display, publisher, count] = entry;
        sources_tsv += tsv_escape(display) + '\t' + tsv_escape(publisher) + '\t'
                       + std::to_string(count) + '\n';
    }

    std::string diagnostics_tsv = "severity\tfile\tline\tmessage\n";
    for (const auto& d : diagnostics)
        diagnostics_tsv += detail::severity_token(d.severity) + '\t' + tsv_escape(d.location.file)
                           + '\t' + std::to_string(d.location.line) + '\t' + tsv_escape(d.message)
                           + '\n';

    std::string manifest;
    manifest += "format_version\t" + std::to_string(kStoreFormatVersion) + '\n';
    manifest += "origin\t" + origin_token(origin) + '\n';
    manifest += "ingested_at\t" + detail::ingest_timestamp() + '\n';
    manifest += "n_documents\t" + std::to_string(corpus.size()) + '\n';
    manifest += "n_authorships\t" + std::to_string(n_authorships) + '\n';
    manifest += "n_affiliations\t" + std::to_string(n_affiliations) + '\n';
    manifest += "n_categories\t" + std::to_string(n_categories) + '\n';
    manifest += "n_sources\t" + std::to_string(sources.size()) + '\n';
    manifest += "n_diagnostics\t" + std::to_string(diagnostics.size()) + '\n';
    manifest += "countries_hash\t" + countries_hash + '\n';
    manifest += "regions_hash\t" + regions_hash + '\n';

    detail::write_file(dir / "documents.tsv", documents);
    detail::write_file(dir / "authorships.tsv", authorships);
    detail::write_file(dir / "affiliations.tsv", affiliations);
    detail::write_file(dir / "categories.tsv", categories);
    detail::write_file(dir / "sources.tsv", sources_tsv);
    detail::write_file(dir / "diagnostics.tsv", diagnostics_tsv);
    detail::write_file(dir / "manifest.tsv", manifest);
}

inline StoreManifest load_manifest(const std::filesystem::path& dir) {
    const auto path = dir / "manifest.tsv";
    if (!std::filesystem::exists(path))
        throw InputError("not a corpus store (missing manifest.tsv): " + dir.string());
    std::map<std::string, std::string> kv;
    std::istringstream in(detail::read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw InputError("manifest.tsv: malformed line");
        kv[line.substr(0, tab)] = line.substr(tab + 1);
    }
    StoreManifest m;
    auto need = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw InputError("manifest.tsv: missing key " + key);
        return it->second;
    };
    m.format_version = std::stoi(need("format_version"));
    if (m.format_version != kStoreFormatVersion)
        throw InputError("unsupported store format version " + std::to_string(m.format_version));
    auto origin = parse_origin(need("origin"));
    if (!origin) throw InputError("manifest.tsv: bad origin");
    m.origin = *origin;
    m.ingested_at = need("ingested_at");
    m.n_documents = std::stoull(need("n_documents"));
    m.n_authorships = std::stoull(need("n_authorships"));
    m.n_affiliations = std::stoull(need("n_affiliations"));
    m.n_categories = std::stoull(need("n_categories"));
    m.n_sources = std::stoull(need("n_sources"));
    m.n_diagnostics = std::stoull(need("n_diagnostics"));
    m.countries_hash = need("countries_hash");
    m.regions_hash = need("regions_hash");
    return m;
}

// Reconstructs the corpus, sorted by doc_id as written.
inline Corpus load_store(const std::filesystem::path& dir) {
    load_manifest(dir);  // validates presence + version

    Corpus corpus;
    std::map<std::string, std::size_t> index;
    for (auto& row : detail::read_tsv_rows(dir / "documents.tsv", 12)) {
        Document doc;
        doc.doc_id = row[0];
        auto origin = parse_origin(row[1]);
        if (!origin) throw InputError("documents.tsv: bad origin " + row[1]);
        doc.origin = *origin;
        doc.year = std::stoi(row[2]);
        doc.title = row[3];
        doc.source_name = row[4];
        doc.publisher = row[5];
        doc.doc_type = row[6];
        doc.language = row[7];
        doc.times_cited = std::stoll(row[8]);
        doc.n_cited_refs = std::stoll(row[9]);
        doc.source_location.file = row[10];
        doc.source_location.line = std::stoull(row[11]);
        index[doc.doc_id] = corpus.size();
        corpus.push_back(std::move(doc));
    }
    auto doc_at = [&](const std::string& doc_id, const char* table) -> Document& {
        auto it = index.find(doc_id);
        if (it == index.end())
            throw InputError(std::string(table) + ": unknown doc_id " + doc_id);
        return corpus[it->second];
    };
    for (auto& row : detail::read_tsv_rows(dir / "authorships.tsv", 4)) {
        Authorship a;
        a.position = std::stoi(row[1]);
        a.raw_name = row[2];
        a.normalized_key = row[3];
        doc_at(row[0], "authorships.tsv").authors.push_back(std::move(a));
    }
    for (auto& row : detail::read_tsv_rows(dir / "affiliations.tsv", 5)) {
        Affiliation aff;
        if (row[2] != kUnresolvedCell) aff.country = row[2];
        if (!row[3].empty())
            aff.linked_author_keys = split(row[3], ';');
        aff.raw_address = row[4];
        doc_at(row[0], "affiliations.tsv").affiliations.push_back(std::move(aff));
    }
    for (auto& row : detail::read_tsv_rows(dir / "categories.tsv", 3))
        doc_at(row[0], "categories.tsv").categories.push_back(row[2]);

    for (auto& doc : corpus)
        std::sort(doc.authors.begin(), doc.authors.end(),
                  [](const Authorship& a, const Authorship& b) { return a.position < b.position; });
    return corpus;
}

inline std::vector<ParseDiagnostic> load_diagnostics(const std::filesystem::path& dir) {
    std::vector<ParseDiagnostic> out;
    for (auto& row : detail::read_tsv_rows(dir / "diagnostics.tsv", 4)) {
        auto severity = detail::parse_severity(row[0]);
        if (!severity) throw InputError("diagnostics.tsv: bad severity " + row[0]);
        out.push_back({*severity, row[3], {row[1], std::stoull(row[2])}});
    }
    return out;
}

// Referential-integrity and manifest-count checks. Empty result = valid.
inline std::vector<std::string> verify_store(const std::filesystem::path& dir) {
    std::vector<std::string> violations;
    StoreManifest manifest;
    try {
        manifest = load_manifest(dir);
    } catch (const std::exception& e) {
        return {e.what()};
    }

    std::set<std::string> doc_ids;
    std::size_t n_documents = 0;
    try {
        for (auto& row : detail::read_tsv_rows(dir / "documents.tsv", 12)) {
            ++n_documents;
            if (!doc_ids.insert(row[0]).second)
                violations.push_back("documents.tsv: duplicate doc_id " + row[0]);
        }
        auto check_children = [&](const char* file, std::size_t n_cols, std::size_t manifest_count) {
            std::size_t n = 0;
            for (auto& row : detail::read_tsv_rows(dir / file, n_cols)) {
                ++n;
                if (doc_ids.find(row[0]) == doc_ids.end())
                    violations.push_back(std::string(file) + ": row references unknown doc_id "
                                         + row[0]);
            }
            if (n != manifest_count)
                violations.push_back(std::string(file) + ": " + std::to_string(n)
                                     + " rows but manifest says " + std::to_string(manifest_count));
        };
        check_children("authorships.tsv", 4, manifest.n_authorships);
        check_children("affiliations.tsv", 5, manifest.n_affiliations);
        check_children("categories.tsv", 3, manifest.n_categories);
        if (n_documents != manifest.n_documents)
            violations.push_back("documents.tsv: " + std::to_string(n_documents)
                                 + " rows but manifest says " + std::to_string(manifest.n_documents));
        const auto sources = detail::read_tsv_rows(dir / "sources.tsv", 3);
        if (sources.size() != manifest.n_sources)
            violations.push_back("sources.tsv: " + std::to_string(sources.size())
                                 + " rows but manifest says " + std::to_string(manifest.n_sources));
        const auto diags = detail::read_tsv_rows(dir / "diagnostics.tsv", 4);
        if (diags.size() != manifest.n_diagnostics)
            violations.push_back("diagnostics.tsv: " + std::to_string(diags.size())
                                 + " rows but manifest says "
                                 + std::to_string(manifest.n_diagnostics));
    } catch (const std::exception& e) {
        violations.push_back(e.what());
    }
    return violations;
}

} // namespace biblioscope
