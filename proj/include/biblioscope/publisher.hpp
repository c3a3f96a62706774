#pragma once

/* Classification of publishing sources by semantic roots: generic company
   markers (Ltd, Pub, Press, Edit, Verlag, Inc), well-known commercial
   brands (Springer, Elsevier, Wiley, Taylor & Francis) and academic
   markers (Univ, Asso/Soc, Inst). A root matches when it appears as a
   case-insensitive word prefix of the publisher string ("Univ" matches
   "Universidad", "Inst" does not match "Einstein"). Each journal is
   assigned at most one root: the matching rule with the highest priority
   wins. */

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "biblioscope/builtin_config.hpp"
#include "biblioscope/corpus.hpp"
#include "biblioscope/errors.hpp"
#include "biblioscope/text.hpp"

namespace biblioscope {

enum class PublisherClass { COMMERCIAL_GENERIC, COMMERCIAL_BRAND, ACADEMIC };

inline std::string publisher_class_label(PublisherClass c) {
    switch (c) {
        case PublisherClass::COMMERCIAL_GENERIC: return "Commercial (generic)";
        case PublisherClass::COMMERCIAL_BRAND: return "Commercial (brand)";
        case PublisherClass::ACADEMIC: return "Academic";
    }
    return "?";
}

inline std::optional<PublisherClass> parse_publisher_class(std::string_view token) {
    if (token == "COMMERCIAL_GENERIC") return PublisherClass::COMMERCIAL_GENERIC;
    if (token == "COMMERCIAL_BRAND") return PublisherClass::COMMERCIAL_BRAND;
    if (token == "ACADEMIC") return PublisherClass::ACADEMIC;
    return std::nullopt;
}

struct RootRule {
    std::vector<std::string> roots;  // alternatives, e.g. {"Asso", "Soc"}
    PublisherClass cls = PublisherClass::COMMERCIAL_GENERIC;
    int priority = 0;  // unique; highest wins

    // display form, "Asso, Soc" style for multi-token rules
    std::string label() const { return join(roots, ", "); }
};

namespace detail {

// lowercase, non-alphanumeric runs collapsed to single spaces
inline std::string fold_publisher(std::string_view s) {
    std::string folded = fold_accents(s);
    std::string out;
    out.reserve(folded.size());
    bool pending = false;
    for (char c : folded) {
        const bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
        if (alnum) {
            if (pending && !out.empty()) out += ' ';
            pending = false;
            out += c;
        } else {
            pending = true;
        }
    }
    return out;
}

// true when `root` occurs in `publisher` starting at a word boundary
inline bool root_matches(const std::string& folded_publisher, const std::string& folded_root) {
    if (folded_root.empty()) return false;
    std::size_t pos = 0;
    while ((pos = folded_publisher.find(folded_root, pos)) != std::string::npos) {
        if (pos == 0 || folded_publisher[pos - 1] == ' ') return true;
        ++pos;
    }
    return false;
}

} // namespace detail

inline std::vector<RootRule> load_publisher_rules(std::istream& in,
                                                  const std::string& name = "publisher_rules.map") {
    std::vector<RootRule> rules;
    std::set<int> priorities;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && starts_with(line, "\xEF\xBB\xBF")) line.erase(0, 3);
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 3)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": expected PRIORITY, CLASS, ROOT");
        RootRule rule;
        try {
            rule.priority = std::stoi(trim(cols[0]));
        } catch (const std::exception&) {
            throw ConfigError(name + ":" + std::to_string(line_no) + ": bad priority '" + cols[0] + "'");
        }
        if (!priorities.insert(rule.priority).second)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": duplicate priority "
                              + std::to_string(rule.priority));
        const auto cls = parse_publisher_class(trim(cols[1]));
        if (!cls)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": unknown class '" + cols[1] + "'");
        rule.cls = *cls;
        for (const auto& piece : split(cols[2], '|')) {
            std::string root = trim(piece);
            if (!root.empty()) rule.roots.push_back(std::move(root));
        }
        if (rule.roots.empty())
            throw ConfigError(name + ":" + std::to_string(line_no) + ": empty root list");
        rules.push_back(std::move(rule));
    }
    if (rules.empty()) throw ConfigError(name + ": no rules");
    return rules;
}

// Table 3 taxonomy with brand > academic > generic precedence.
inline std::vector<RootRule> default_publisher_rules() {
    std::istringstream in{std::string(kBuiltinPublisherRules)};
    return load_publisher_rules(in, "<builtin publisher_rules.map>");
}

// The winning rule for a publisher string, or nullptr when nothing matches.
inline const RootRule* classify_publisher(std::string_view publisher,
                                          const std::vector<RootRule>& rules) {
    const std::string folded = detail::fold_publisher(publisher);
    const RootRule* best = nullptr;
    for (const auto& rule : rules) {
        bool hit = false;
        for (const auto& root : rule.roots) {
            if (detail::root_matches(folded, detail::fold_publisher(root))) {
                hit = true;
                break;
            }
        }
        if (hit && (best == nullptr || rule.priority > best->priority)) best = &rule;
    }
    return best;
}

struct PublisherProfileRow {
    std::string root_label;
    PublisherClass cls = PublisherClass::COMMERCIAL_GENERIC;
    long long journals = 0;
    double percent = 0;  // of total journals
};

struct PublisherProfile {
    std::vector<PublisherProfileRow> rows;  // rule order
    long long unclassified = 0;
    long long total_journals = 0;
};

// Journal-level profile: each distinct source carrying at least one corpus
// document counts once, under the root of its publisher string. Journals
// with an empty publisher stay unclassified. The publisher of a journal is
// the first non-empty PU seen in corpus order.
inline PublisherProfile publisher_profile(const Corpus& corpus, const std::vector<RootRule>& rules) {
    std::map<std::string, std::string> journal_publisher;  // folded source -> publisher
    for (const auto& doc : corpus) {
        if (doc.source_name.empty()) continue;
        const std::string key = detail::source_key(doc.source_name);
        auto [it, inserted] = journal_publisher.emplace(key, doc.publisher);
        if (!inserted && it->second.empty() && !doc.publisher.empty()) it->second = doc.publisher;
    }

    PublisherProfile profile;
    profile.rows.reserve(rules.size());
    std::map<int, std::size_t> row_by_priority;
    for (const auto& rule : rules) {
        PublisherProfileRow row;
        row.root_label = rule.label();
        row.cls = rule.cls;
        row_by_priority[rule.priority] = profile.rows.size();
        profile.rows.push_back(std::move(row));
    }

    for (const auto& [_, publisher] : journal_publisher) {
        ++profile.total_journals;
        const RootRule* rule = publisher.empty() ? nullptr : classify_publisher(publisher, rules);
        if (rule == nullptr)
            ++profile.unclassified;
        else
            ++profile.rows[row_by_priority[rule->priority]].journals;
    }

    for (auto& row : profile.rows)
        row.percent = profile.total_journals == 0
                          ? 0.0
                          : 100.0 * static_cast<double>(row.journals)
                                / static_cast<double>(profile.total_journals);
    return profile;
}

} // namespace biblioscope
