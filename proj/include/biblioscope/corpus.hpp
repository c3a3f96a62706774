#pragma once

/* Interpretation of TaggedRecords into normalized Documents: authors with
   identity keys, affiliations with resolved countries, and the author ->
   address linkage that feeds fractional counting. Documents are immutable
   values once built. */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biblioscope/geography.hpp"
#include "biblioscope/normalize.hpp"
#include "biblioscope/tagfile.hpp"
#include "biblioscope/text.hpp"

namespace biblioscope {

struct Authorship {
    std::string raw_name;
    std::string normalized_key;
    int position = 1;  // byline order, first author is 1
};

struct Affiliation {
    std::string raw_address;                      // original C1/RP line, brackets intact
    std::vector<std::string> linked_author_keys;  // bracket names matched to authors
    std::optional<std::string> country;           // nullopt = unresolved
};

struct Document {
    std::string doc_id;  // stable hash, see make_doc_id
    Origin origin = Origin::WOS;
    int year = 0;        // 0 when the record is undated
    std::string title;
    std::string source_name;
    std::string publisher;
    std::string doc_type;
    std::string language;
    std::vector<Authorship> authors;
    std::vector<Affiliation> affiliations;
    long long times_cited = 0;
    long long n_cited_refs = 0;
    std::vector<std::string> categories;
    SourceLocation source_location;
};

using Corpus = std::vector<Document>;

namespace detail {

inline std::string join_wrapped(const std::vector<std::string>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string piece = trim(lines[i]);
        if (piece.empty()) continue;
        if (!out.empty()) out += ' ';
        out += piece;
    }
    return out;
}

inline long long parse_count(const std::string& text, const char* tag, const Document& doc,
                             std::vector<ParseDiagnostic>& diags) {
    const std::string t = trim(text);
    if (t.empty()) return 0;
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos == t.size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    diags.push_back({Severity::WARNING,
                     std::string("non-numeric ") + tag + " '" + t + "' treated as 0",
                     doc.source_location});
    return 0;
}

} // namespace detail

// UT is the id basis when present; otherwise (title, year, source).
inline std::string make_doc_id(Origin origin, const TaggedRecord& record) {
    const auto ut = field_values(record, "UT");
    std::string basis = origin_token(origin);
    basis += '\x1f';
    if (!ut.empty() && !trim(ut.front()).empty()) {
        basis += "ut";
        basis += '\x1f';
        basis += trim(ut.front());
    } else {
        basis += detail::join_wrapped(field_values(record, "TI"));
        basis += '\x1f';
        basis += detail::join_wrapped(field_values(record, "PY"));
        basis += '\x1f';
        basis += detail::join_wrapped(field_values(record, "SO"));
    }
    return hex64(fnv1a64(basis));
}

// Builds a Document from a parsed record. Returns nullopt (with an ERROR
// diagnostic) when the record has no usable author list. Field problems
// below that degrade to WARNINGs.
inline std::optional<Document> build_document(const TaggedRecord& record,
                                              const CountryLexicon& lexicon,
                                              std::vector<ParseDiagnostic>& diags) {
    Document doc;
    doc.origin = record.origin;
    doc.source_location = record.source_location;
    doc.doc_id = make_doc_id(record.origin, record);

    const auto au = field_values(record, "AU");
    const auto af = field_values(record, "AF");
    // AU is the counting basis; AF only improves the display form
    const auto& names = au.empty() ? af : au;
    if (names.empty()) {
        diags.push_back({Severity::ERROR, "record has neither AU nor AF; rejected",
                         record.source_location});
        return std::nullopt;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string trimmed = trim(names[i]);
        if (trimmed.empty()) {
            diags.push_back({Severity::WARNING, "empty author line skipped", record.source_location});
            continue;
        }
        Authorship a;
        a.position = static_cast<int>(doc.authors.size()) + 1;
        a.raw_name = (!au.empty() && af.size() == names.size() && !trim(af[i]).empty())
                         ? trim(af[i])
                         : trimmed;
        bool fallback = false;
        a.normalized_key = normalize_author(trimmed, &fallback);
        if (fallback)
            diags.push_back({Severity::WARNING,
                             "author name '" + trimmed + "' has no separable given name",
                             record.source_location});
        doc.authors.push_back(std::move(a));
    }
    if (doc.authors.empty()) {
        diags.push_back({Severity::ERROR, "record has no usable author names; rejected",
                         record.source_location});
        return std::nullopt;
    }

    doc.title = detail::join_wrapped(field_values(record, "TI"));
    doc.source_name = detail::join_wrapped(field_values(record, "SO"));
    doc.publisher = detail::join_wrapped(field_values(record, "PU"));
    doc.doc_type = detail::join_wrapped(field_values(record, "DT"));
    doc.language = detail::join_wrapped(field_values(record, "LA"));

    const std::string py = detail::join_wrapped(field_values(record, "PY"));
    if (!py.empty()) {
        try {
            std::size_t pos = 0;
            int year = std::stoi(py, &pos);
            if (pos == py.size() && year > 0)
                doc.year = year;
            else
                diags.push_back({Severity::WARNING, "unparseable PY '" + py + "'; document undated",
                                 record.source_location});
        } catch (const std::exception&) {
            diags.push_back({Severity::WARNING, "unparseable PY '" + py + "'; document undated",
                             record.source_location});
        }
    } else {
        diags.push_back({Severity::WARNING, "missing PY; document undated", record.source_location});
    }

    const auto tc = field_values(record, "TC");
    doc.times_cited = tc.empty() ? 0 : detail::parse_count(tc.front(), "TC", doc, diags);
    const auto nr = field_values(record, "NR");
    doc.n_cited_refs = nr.empty() ? 0 : detail::parse_count(nr.front(), "NR", doc, diags);

    auto categories = field_values(record, "WC");
    if (categories.empty()) categories = field_values(record, "SC");
    for (auto& cat : categories) {
        bool seen = false;
        for (const auto& existing : doc.categories)
            if (existing == cat) { seen = true; break; }
        if (!seen) doc.categories.push_back(std::move(cat));
    }

    // one affiliation per C1 value line; RP is the fallback when C1 is absent
    auto addresses = field_values(record, "C1");
    if (addresses.empty()) addresses = field_values(record, "RP");
    for (const auto& line : addresses) {
        const std::string addr = trim(line);
        if (addr.empty()) continue;
        Affiliation aff;
        aff.raw_address = addr;
        aff.country = extract_country(addr, lexicon);
        doc.affiliations.push_back(std::move(aff));
    }

    return doc;
}

namespace detail {

// Source (journal) identity is the folded name; display keeps the raw form.
inline std::string source_key(const std::string& source_name) {
    return fold_accents(collapse_spaces(source_name));
}

// Names inside a leading "[...]" block of a C1 line, split on ';'.
inline std::vector<std::string> bracket_names(const std::string& raw_address) {
    std::vector<std::string> out;
    if (raw_address.empty() || raw_address.front() != '[') return out;
    auto close = raw_address.find(']');
    if (close == std::string::npos) return out;
    for (const auto& piece : split(raw_address.substr(1, close - 1), ';')) {
        std::string name = trim(piece);
        if (!name.empty()) out.push_back(std::move(name));
    }
    return out;
}

} // namespace detail

// Links every author to the countries credited to them. Bracketed C1 lines
// bind listed authors to that address; authors left unbound inherit the
// multiset of all resolved document countries. Fills
// Affiliation::linked_author_keys as a side effect. Result is indexed by
// author position - 1; entries are country multisets and may be empty only
// when every address is unresolved.
inline std::vector<std::vector<std::string>> link_authors_addresses(
    Document& doc, std::vector<ParseDiagnostic>* diags = nullptr) {
    std::vector<std::vector<std::string>> linked(doc.authors.size());

    auto author_index = [&](const std::string& key) -> int {
        for (std::size_t i = 0; i < doc.authors.size(); ++i)
            if (doc.authors[i].normalized_key == key) return static_cast<int>(i);
        return -1;
    };

    std::vector<std::string> all_resolved;
    for (const auto& aff : doc.affiliations)
        if (aff.country) all_resolved.push_back(*aff.country);

    for (auto& aff : doc.affiliations) {
        aff.linked_author_keys.clear();
        for (const auto& name : detail::bracket_names(aff.raw_address)) {
            const std::string key = normalize_author(name);
            const int idx = author_index(key);
            if (idx < 0) {
                if (diags)
                    diags->push_back({Severity::WARNING,
                                      "bracketed author '" + name + "' matches no byline author; link dropped",
                                      doc.source_location});
                continue;
            }
            aff.linked_author_keys.push_back(key);
            if (aff.country) linked[idx].push_back(*aff.country);
        }
    }

    // fallback: authors with no resolved bracket link inherit everything
    for (auto& countries : linked)
        if (countries.empty()) countries = all_resolved;
    return linked;
}

// Distinct resolved countries of one document. Unresolved affiliations are
// not part of the set; when `unresolved_addresses` is given their number is
// added to it.
inline std::vector<std::string> document_country_set(const Document& doc,
                                                     std::size_t* unresolved_addresses = nullptr) {
    std::vector<std::string> out;
    for (const auto& aff : doc.affiliations) {
        if (!aff.country) {
            if (unresolved_addresses) ++*unresolved_addresses;
            continue;
        }
        bool seen = false;
        for (const auto& c : out)
            if (c == *aff.country) { seen = true; break; }
        if (!seen) out.push_back(*aff.country);
    }
    return out;
}

} // namespace biblioscope
