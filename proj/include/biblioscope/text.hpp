#pragma once

/* Small string helpers shared across the library: trimming, splitting,
   ASCII case folding, accent folding for the Latin ranges common in
   bibliographic data, UTF-8 sanitizing, TSV field escaping and stable
   64-bit hashing. */

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace biblioscope {

inline std::string trim_right(std::string_view s) {
    std::size_t end = s.size();
    while (end > 0 && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r' || s[end - 1] == '\n'))
        --end;
    return std::string(s.substr(0, end));
}

inline std::string trim(std::string_view s) {
    std::size_t begin = 0;
    while (begin < s.size() && (s[begin] == ' ' || s[begin] == '\t' || s[begin] == '\r' || s[begin] == '\n'))
        ++begin;
    std::size_t end = s.size();
    while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r' || s[end - 1] == '\n'))
        --end;
    return std::string(s.substr(begin, end - begin));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

// Collapse runs of whitespace to single spaces and trim the ends.
inline std::string collapse_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            pending = !out.empty();
        } else {
            if (pending) out += ' ';
            pending = false;
            out += c;
        }
    }
    return out;
}

namespace detail {

// Decodes one UTF-8 code point at s[i]. Returns false on malformed input,
// in which case *len is 1 (resynchronize one byte at a time).
inline bool decode_utf8(std::string_view s, std::size_t i, char32_t* cp, std::size_t* len) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        *cp = b0;
        *len = 1;
        return true;
    }
    std::size_t need;
    char32_t acc;
    if ((b0 & 0xE0) == 0xC0) { need = 1; acc = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { need = 2; acc = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { need = 3; acc = b0 & 0x07; }
    else { *len = 1; return false; }
    if (i + need >= s.size()) { *len = 1; return false; }
    for (std::size_t k = 1; k <= need; ++k) {
        const unsigned char b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) { *len = 1; return false; }
        acc = (acc << 6) | (b & 0x3F);
    }
    // reject overlong encodings, surrogates and out-of-range values
    static constexpr char32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
    if (acc < kMin[need] || acc > 0x10FFFF || (acc >= 0xD800 && acc <= 0xDFFF)) {
        *len = 1;
        return false;
    }
    *cp = acc;
    *len = need + 1;
    return true;
}

inline void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// ASCII replacement for one accented Latin code point, already lowercased.
// Returns nullptr when the code point has no mapping here.
inline const char* fold_latin(char32_t cp) {
    switch (cp) {
        case U'À': case U'Á': case U'Â': case U'Ã': case U'Ä': case U'Å':
        case U'à': case U'á': case U'â': case U'ã': case U'ä': case U'å':
        case U'Ā': case U'ā': case U'Ă': case U'ă': case U'Ą': case U'ą':
            return "a";
        case U'Æ': case U'æ': return "ae";
        case U'Ç': case U'ç': case U'Ć': case U'ć': case U'Ĉ': case U'ĉ':
        case U'Ċ': case U'ċ': case U'Č': case U'č':
            return "c";
        case U'Ď': case U'ď': case U'Đ': case U'đ': case U'Ð': case U'ð':
            return "d";
        case U'È': case U'É': case U'Ê': case U'Ë':
        case U'è': case U'é': case U'ê': case U'ë':
        case U'Ē': case U'ē': case U'Ĕ': case U'ĕ': case U'Ė': case U'ė':
        case U'Ę': case U'ę': case U'Ě': case U'ě':
            return "e";
        case U'Ĝ': case U'ĝ': case U'Ğ': case U'ğ': case U'Ġ': case U'ġ':
        case U'Ģ': case U'ģ':
            return "g";
        case U'Ĥ': case U'ĥ': case U'Ħ': case U'ħ': return "h";
        case U'Ì': case U'Í': case U'Î': case U'Ï':
        case U'ì': case U'í': case U'î': case U'ï':
        case U'Ĩ': case U'ĩ': case U'Ī': case U'ī': case U'Ĭ': case U'ĭ':
        case U'Į': case U'į': case U'İ': case U'ı':
            return "i";
        case U'Ĵ': case U'ĵ': return "j";
        case U'Ķ': case U'ķ': return "k";
        case U'Ĺ': case U'ĺ': case U'Ļ': case U'ļ': case U'Ľ': case U'ľ':
        case U'Ŀ': case U'ŀ': case U'Ł': case U'ł':
            return "l";
        case U'Ñ': case U'ñ': case U'Ń': case U'ń': case U'Ņ': case U'ņ':
        case U'Ň': case U'ň':
            return "n";
        case U'Ò': case U'Ó': case U'Ô': case U'Õ': case U'Ö': case U'Ø':
        case U'ò': case U'ó': case U'ô': case U'õ': case U'ö': case U'ø':
        case U'Ō': case U'ō': case U'Ŏ': case U'ŏ': case U'Ő': case U'ő':
            return "o";
        case U'Œ': case U'œ': return "oe";
        case U'Ŕ': case U'ŕ': case U'Ŗ': case U'ŗ': case U'Ř': case U'ř':
            return "r";
        case U'Ś': case U'ś': case U'Ŝ': case U'ŝ': case U'Ş': case U'ş':
        case U'Š': case U'š':
            return "s";
        case U'ß': return "ss";
        case U'Ţ': case U'ţ': case U'Ť': case U'ť': case U'Ŧ': case U'ŧ':
            return "t";
        case U'Ù': case U'Ú': case U'Û': case U'Ü':
        case U'ù': case U'ú': case U'û': case U'ü':
        case U'Ũ': case U'ũ': case U'Ū': case U'ū': case U'Ŭ': case U'ŭ':
        case U'Ů': case U'ů': case U'Ű': case U'ű': case U'Ų': case U'ų':
            return "u";
        case U'Ŵ': case U'ŵ': return "w";
        case U'Ý': case U'ý': case U'ÿ': case U'Ŷ': case U'ŷ': case U'Ÿ':
            return "y";
        case U'Ź': case U'ź': case U'Ż': case U'ż': case U'Ž': case U'ž':
            return "z";
        case U'Þ': case U'þ': return "th";
        default: return nullptr;
    }
}

} // namespace detail

// Lowercases and strips accents from the Latin-1 Supplement / Latin
// Extended-A ranges. Unmapped non-ASCII code points pass through unchanged.
// Idempotent: folding a folded string is a no-op.
inline std::string fold_accents(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp = 0;
        std::size_t len = 0;
        if (!detail::decode_utf8(s, i, &cp, &len)) {
            out += s[i];
            i += 1;
            continue;
        }
        if (cp < 0x80) {
            char c = static_cast<char>(cp);
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
            out += c;
        } else if (const char* rep = detail::fold_latin(cp)) {
            out += rep;
        } else {
            detail::encode_utf8(cp, out);
        }
        i += len;
    }
    return out;
}

// Replaces malformed UTF-8 byte sequences with U+FFFD. Sets *had_errors
// when anything was replaced.
inline std::string sanitize_utf8(std::string_view s, bool* had_errors = nullptr) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp = 0;
        std::size_t len = 0;
        if (detail::decode_utf8(s, i, &cp, &len)) {
            out.append(s.substr(i, len));
            i += len;
        } else {
            out += "\xEF\xBF\xBD";
            if (had_errors) *had_errors = true;
            i += 1;
        }
    }
    return out;
}

// TSV cell escaping: tab, newline, carriage return and backslash.
inline std::string tsv_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\\': out += "\\\\"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string tsv_unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
            switch (s[i + 1]) {
                case 't': out += '\t'; ++i; continue;
                case 'n': out += '\n'; ++i; continue;
                case 'r': out += '\r'; ++i; continue;
                case '\\': out += '\\'; ++i; continue;
                default: break;
            }
        }
        out += s[i];
    }
    return out;
}

// FNV-1a, 64 bit. Stable across platforms; used for doc ids and config hashes.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Fixed-point decimal formatting (C locale semantics, no locale dependence).
inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    std::string out = buf;
    // avoid "-0.00"
    if (out.size() > 1 && out[0] == '-' && out.find_first_not_of("0.-") == std::string::npos)
        out.erase(0, 1);
    return out;
}

} // namespace biblioscope
