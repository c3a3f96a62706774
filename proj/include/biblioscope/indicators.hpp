#pragma once

/* Descriptive statistics, per-country production counts and subject
   category volumes. All aggregation is deterministic: documents are
   visited in corpus order and floating-point sums accumulate in that
   order. */

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biblioscope/corpus.hpp"
#include "biblioscope/geography.hpp"

namespace biblioscope {

enum class Attribute {
    AUTHORS,
    ADDRESSES,
    TIMES_CITED,
    CITED_REFERENCES,
    SUBJECT_CATEGORIES,
    PAPERS_PER_SOURCE,
};

inline constexpr std::array<Attribute, 6> kAllAttributes = {
    Attribute::AUTHORS,          Attribute::ADDRESSES,
    Attribute::TIMES_CITED,      Attribute::CITED_REFERENCES,
    Attribute::SUBJECT_CATEGORIES, Attribute::PAPERS_PER_SOURCE,
};

inline std::string attribute_label(Attribute a) {
    switch (a) {
        case Attribute::AUTHORS: return "Authors";
        case Attribute::ADDRESSES: return "Addresses";
        case Attribute::TIMES_CITED: return "Times cited";
        case Attribute::CITED_REFERENCES: return "Cited references";
        case Attribute::SUBJECT_CATEGORIES: return "Subject Categories";
        case Attribute::PAPERS_PER_SOURCE: return "Indexed Sources";
    }
    return "?";
}

struct AttributeSummary {
    Attribute attribute = Attribute::AUTHORS;
    double total = 0;   // N
    double mean = 0;    // mu
    double stddev = 0;  // sigma, population
};

struct CountryProduction {
    std::string country;
    long long records = 0;     // whole count
    double fractional = 0;     // author-fractional credit
    long long first_author = 0;
};

struct CategoryVolume {
    std::string category;
    long long count = 0;
    double share = 0;  // fraction of corpus documents, overlaps allowed
    int rank = 1;      // dense, by count descending
};

namespace detail {

struct RunningMoments {
    // Welford's online mean/variance
    long long n = 0;
    double mean = 0;
    double m2 = 0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double stddev_population() const {
        return n == 0 ? 0.0 : std::sqrt(m2 / static_cast<double>(n));
    }
};

} // namespace detail

// N / mean / population-sigma for one attribute. Per-document attributes
// total over documents; PAPERS_PER_SOURCE totals distinct sources and its
// distribution is papers per source.
inline AttributeSummary summarize_attribute(const Corpus& corpus, Attribute attribute) {
    if (corpus.empty()) throw std::invalid_argument("summarize_attribute: empty corpus");

    AttributeSummary out;
    out.attribute = attribute;
    detail::RunningMoments moments;

    if (attribute == Attribute::PAPERS_PER_SOURCE) {
        std::map<std::string, long long> papers_per_source;
        for (const auto& doc : corpus) {
            if (doc.source_name.empty()) continue;
            ++papers_per_source[detail::source_key(doc.source_name)];
        }
        double total_papers = 0;
        for (const auto& [_, count] : papers_per_source) {
            moments.add(static_cast<double>(count));
            total_papers += static_cast<double>(count);
        }
        out.total = static_cast<double>(papers_per_source.size());
        out.mean = papers_per_source.empty() ? 0.0 : total_papers / out.total;
        out.stddev = moments.stddev_population();
        return out;
    }

    double total = 0;
    for (const auto& doc : corpus) {
        double value = 0;
        switch (attribute) {
            case Attribute::AUTHORS: value = static_cast<double>(doc.authors.size()); break;
            case Attribute::ADDRESSES: value = static_cast<double>(doc.affiliations.size()); break;
            case Attribute::TIMES_CITED: value = static_cast<double>(doc.times_cited); break;
            case Attribute::CITED_REFERENCES: value = static_cast<double>(doc.n_cited_refs); break;
            case Attribute::SUBJECT_CATEGORIES: value = static_cast<double>(doc.categories.size()); break;
            case Attribute::PAPERS_PER_SOURCE: break;  // handled above
        }
        total += value;
        moments.add(value);
    }
    out.total = total;
    out.mean = total / static_cast<double>(corpus.size());
    out.stddev = moments.stddev_population();
    return out;
}

// Per-country production: whole record counts over resolved affiliations,
// author-fractional credit (each author splits 1/#authors over their
// linked-country multiset) and whole first-author counts (a multi-country
// first author credits each of their countries fully).
//
// `links` must be parallel to `corpus`, as produced by
// link_authors_addresses per document. When `region_filter` is set, only
// countries of that region are reported.
inline std::vector<CountryProduction> country_production(
    const Corpus& corpus, const std::vector<std::vector<std::vector<std::string>>>& links,
    std::optional<Region> region_filter = std::nullopt, const RegionMap* region_map = nullptr) {
    if (links.size() != corpus.size())
        throw std::invalid_argument("country_production: links not parallel to corpus");
    if (region_filter && region_map == nullptr)
        throw std::invalid_argument("country_production: region filter needs a region map");

    std::map<std::string, CountryProduction> by_country;
    auto slot = [&](const std::string& country) -> CountryProduction& {
        auto& row = by_country[country];
        row.country = country;
        return row;
    };

    for (std::size_t d = 0; d < corpus.size(); ++d) {
        const Document& doc = corpus[d];
        const auto& doc_links = links[d];

        for (const auto& country : document_country_set(doc))
            ++slot(country).records;

        const double author_weight =
            doc.authors.empty() ? 0.0 : 1.0 / static_cast<double>(doc.authors.size());
        for (const auto& author_countries : doc_links) {
            if (author_countries.empty()) continue;
            const double per_country =
                author_weight / static_cast<double>(author_countries.size());
            for (const auto& country : author_countries)
                slot(country).fractional += per_country;
        }

        if (!doc_links.empty()) {
            std::vector<std::string> first_countries;
            for (const auto& c : doc_links.front()) {
                if (std::find(first_countries.begin(), first_countries.end(), c)
                    == first_countries.end())
                    first_countries.push_back(c);
            }
            for (const auto& country : first_countries)
                ++slot(country).first_author;
        }
    }

    std::vector<CountryProduction> out;
    out.reserve(by_country.size());
    for (auto& [country, row] : by_country) {
        if (region_filter && region_map->region_of(country) != *region_filter) continue;
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(), [](const CountryProduction& a, const CountryProduction& b) {
        if (a.records != b.records) return a.records > b.records;
        return a.country < b.country;
    });
    return out;
}

// Documents per category; a document carrying k categories counts once in
// each, so shares may sum past 1. Ranks are dense over descending counts.
inline std::vector<CategoryVolume> category_volume(const Corpus& corpus) {
    std::map<std::string, long long> counts;
    for (const auto& doc : corpus)
        for (const auto& cat : doc.categories)
            ++counts[cat];

    std::vector<CategoryVolume> out;
    out.reserve(counts.size());
    const double n_docs = static_cast<double>(corpus.size());
    for (const auto& [cat, count] : counts) {
        CategoryVolume v;
        v.category = cat;
        v.count = count;
        v.share = n_docs == 0 ? 0.0 : static_cast<double>(count) / n_docs;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const CategoryVolume& a, const CategoryVolume& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.category < b.category;
    });
    int rank = 0;
    long long prev_count = -1;
    for (auto& v : out) {
        if (v.count != prev_count) {
            ++rank;
            prev_count = v.count;
        }
        v.rank = rank;
    }
    return out;
}

struct CrossRankRow {
    std::string category;
    std::optional<CategoryVolume> a;
    std::optional<CategoryVolume> b;
};

// Joins two category-volume tables by label. Rows are ordered by the first
// table's rank, with categories present only in the second table after.
inline std::vector<CrossRankRow> cross_rank(const std::vector<CategoryVolume>& a,
                                            const std::vector<CategoryVolume>& b) {
    std::map<std::string, CrossRankRow> rows;
    for (const auto& v : a) {
        auto& row = rows[v.category];
        row.category = v.category;
        row.a = v;
    }
    for (const auto& v : b) {
        auto& row = rows[v.category];
        row.category = v.category;
        row.b = v;
    }
    std::vector<CrossRankRow> out;
    out.reserve(rows.size());
    for (auto& [_, row] : rows) out.push_back(std::move(row));
    constexpr int kNoRank = 1 << 30;
    std::sort(out.begin(), out.end(), [&](const CrossRankRow& x, const CrossRankRow& y) {
        const int rax = x.a ? x.a->rank : kNoRank;
        const int ray = y.a ? y.a->rank : kNoRank;
        if (rax != ray) return rax < ray;
        const int rbx = x.b ? x.b->rank : kNoRank;
        const int rby = y.b ? y.b->rank : kNoRank;
        if (rbx != rby) return rbx < rby;
        return x.category < y.category;
    });
    return out;
}

} // namespace biblioscope
