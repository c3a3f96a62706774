#pragma once

/* Author-form normalization. Two author strings are treated as the same
   person when they coincide on the folded surname and the first one or two
   initials of the given-name part; nothing stronger is attempted.

   Key shape: "<folded surname>,<up to two initials>", e.g.
   "Vélez-Cuartas, G. A." -> "velez-cuartas,ga" and
   "Garcia, Juan Luis"    -> "garcia,jl".
   Normalization is idempotent: keys normalize to themselves. */

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biblioscope/text.hpp"

namespace biblioscope {

namespace detail {

// Splits a given-name part into tokens at spaces, periods and hyphens.
inline std::vector<std::string> given_name_tokens(std::string_view given) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : given) {
        if (c == ' ' || c == '.' || c == '-' || c == '\t') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

inline bool is_all_upper_ascii(std::string_view s) {
    for (char c : s)
        if (c < 'A' || c > 'Z') return false;
    return !s.empty();
}

inline bool is_all_alpha_ascii(std::string_view s) {
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) return false;
    return !s.empty();
}

// First code point of a folded token (folding may leave unmapped
// multi-byte characters in place).
inline std::string first_letter(std::string_view folded_tok) {
    char32_t cp = 0;
    std::size_t len = 0;
    if (!folded_tok.empty() && decode_utf8(folded_tok, 0, &cp, &len))
        return std::string(folded_tok.substr(0, len));
    return folded_tok.empty() ? std::string() : std::string(1, folded_tok[0]);
}

// Initials of the given-name part, at most two. Tokens that look like
// initials runs (all-caps up to three letters, or any one/two-letter
// token) contribute each letter; name words contribute their first
// letter. The two-letter case must stay a run so keys re-normalize to
// themselves. Detection runs on the raw token: folding lowercases the
// all-caps form.
inline std::string given_initials(std::string_view given_raw) {
    std::string initials;
    int letters = 0;
    for (const auto& tok : given_name_tokens(given_raw)) {
        if (letters == 2) break;
        const std::string folded = fold_accents(tok);
        const bool run = (folded.size() <= 2 && is_all_alpha_ascii(folded))
                         || (tok.size() <= 3 && is_all_upper_ascii(tok));
        if (run) {
            for (char c : folded) {
                initials += c;
                if (++letters == 2) break;
            }
        } else {
            initials += first_letter(folded);
            ++letters;
        }
    }
    return initials;
}

} // namespace detail

// Builds the weak identity key for an author form. `fallback_used`, when
// given, is set if the input had no recognizable surname/given split and
// the key is just the folded full string.
inline std::string normalize_author(std::string_view raw_name, bool* fallback_used = nullptr) {
    if (fallback_used) *fallback_used = false;
    const std::string name = collapse_spaces(raw_name);
    if (name.empty()) throw std::invalid_argument("normalize_author: empty name");

    std::string surname;
    std::string given;
    auto comma = name.find(',');
    if (comma != std::string::npos) {
        surname = trim(name.substr(0, comma));
        given = trim(name.substr(comma + 1));
    } else {
        // "Surname I." shape: last whitespace-separated token is the
        // given-name part
        auto space = name.rfind(' ');
        if (space == std::string::npos) {
            if (fallback_used) *fallback_used = true;
            return fold_accents(name);
        }
        surname = trim(name.substr(0, space));
        given = trim(name.substr(space + 1));
    }
    if (surname.empty()) {
        if (fallback_used) *fallback_used = true;
        return fold_accents(name);
    }
    return fold_accents(surname) + "," + detail::given_initials(given);
}

} // namespace biblioscope
