#pragma once

/* Stream parser for field-tagged bibliographic export files (the WoS /
   SciELO CI plain-text family).

   Grammar, line by line:
     - a field line is a 2-character tag from [A-Z0-9], one space, then the
       value; trailing whitespace is trimmed and CRLF/LF both accepted
     - a bare 2-character tag is a field with a single empty value
     - a continuation line starts with exactly three spaces and extends the
       value list of the most recently started field
     - "ER" terminates the current record, "EF" terminates the file
     - "FN"/"VR" lines are collected into a header pseudo-record that is
       kept out of the document stream
   Records begin at the first field line after ER (or file start). A "PT"
   field arriving while a block is already open marks the previous block as
   an unterminated record: the block is discarded with an ERROR diagnostic
   and parsing resumes at the PT line. A block still open at EOF is
   discarded the same way. Malformed lines and stray bytes degrade to
   WARNINGs, never abort the stream. */

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biblioscope/text.hpp"

namespace biblioscope {

enum class Origin { WOS, SCIELO };

inline std::string origin_token(Origin o) {
    return o == Origin::WOS ? "wos" : "scielo";
}

inline std::optional<Origin> parse_origin(std::string_view s) {
    const std::string t = to_lower_ascii(s);
    if (t == "wos") return Origin::WOS;
    if (t == "scielo") return Origin::SCIELO;
    return std::nullopt;
}

enum class Severity { WARNING, ERROR };

struct SourceLocation {
    std::string file;
    std::size_t line = 1;  // 1-based
};

struct ParseDiagnostic {
    Severity severity = Severity::WARNING;
    std::string message;
    SourceLocation location;
};

struct TaggedField {
    std::string tag;                  // exactly 2 chars, [A-Z0-9]
    std::vector<std::string> values;  // never empty
};

struct TaggedRecord {
    std::vector<TaggedField> fields;  // file order, tags may repeat
    Origin origin = Origin::WOS;
    SourceLocation source_location;   // first line of the block
};

struct ParseResult {
    std::vector<TaggedRecord> records;
    std::optional<TaggedRecord> header;  // FN/VR pseudo-record, when present
    std::vector<ParseDiagnostic> diagnostics;
};

namespace detail {

inline bool is_tag_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// "PT" starts every record in this export family; seeing it while a block
// is open means the previous record never got its ER.
inline constexpr std::string_view kRecordStartTag = "PT";

struct LineClass {
    enum Kind { BLANK, FIELD, CONTINUATION, END_RECORD, END_FILE, OTHER } kind = OTHER;
    std::string tag;
    std::string value;
};

inline LineClass classify_line(const std::string& line) {
    LineClass out;
    if (line.empty() || line.find_first_not_of(' ') == std::string::npos) {
        out.kind = LineClass::BLANK;
        return out;
    }
    if (starts_with(line, "   ")) {
        out.kind = LineClass::CONTINUATION;
        out.value = line.substr(3);
        return out;
    }
    if (line.size() >= 2 && is_tag_char(line[0]) && is_tag_char(line[1])
        && (line.size() == 2 || line[2] == ' ')) {
        const std::string tag = line.substr(0, 2);
        if (tag == "ER") { out.kind = LineClass::END_RECORD; return out; }
        if (tag == "EF") { out.kind = LineClass::END_FILE; return out; }
        out.kind = LineClass::FIELD;
        out.tag = tag;
        out.value = line.size() > 3 ? line.substr(3) : std::string();
        return out;
    }
    out.kind = LineClass::OTHER;
    return out;
}

} // namespace detail

// Parses one export stream into ER-terminated records plus diagnostics.
// Pure function of the bytes: same input, same output.
inline ParseResult parse_stream(std::istream& in, Origin origin,
                                const std::string& stream_name = "<stream>") {
    ParseResult result;

    TaggedRecord block;
    block.origin = origin;
    bool block_open = false;

    TaggedRecord header;
    header.origin = origin;

    // where the next continuation line lands: one of the two records above
    TaggedRecord* active_record = nullptr;

    bool file_ended = false;
    bool warned_after_ef = false;
    std::size_t line_no = 0;
    std::string raw;

    auto diag = [&](Severity sev, std::string msg, std::size_t line) {
        result.diagnostics.push_back({sev, std::move(msg), {stream_name, line}});
    };

    auto discard_open_block = [&]() {
        diag(Severity::ERROR, "record has no ER terminator; block discarded",
             block.source_location.line);
        block = TaggedRecord{};
        block.origin = origin;
        block_open = false;
        if (active_record == &block) active_record = nullptr;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (line_no == 1 && starts_with(raw, "\xEF\xBB\xBF")) raw.erase(0, 3);

        bool had_bad_bytes = false;
        std::string line = trim_right(sanitize_utf8(raw, &had_bad_bytes));
        if (had_bad_bytes)
            diag(Severity::WARNING, "invalid UTF-8 replaced with U+FFFD", line_no);

        auto cls = detail::classify_line(line);
        if (cls.kind == detail::LineClass::BLANK) continue;

        if (file_ended) {
            if (!warned_after_ef) {
                diag(Severity::WARNING, "content after EF ignored", line_no);
                warned_after_ef = true;
            }
            continue;
        }

        switch (cls.kind) {
            case detail::LineClass::FIELD: {
                if (cls.tag == "FN" || cls.tag == "VR") {
                    if (header.fields.empty()) header.source_location = {stream_name, line_no};
                    header.fields.push_back({cls.tag, {cls.value}});
                    active_record = &header;
                    break;
                }
                if (cls.tag == detail::kRecordStartTag && block_open)
                    discard_open_block();
                if (!block_open) {
                    block.source_location = {stream_name, line_no};
                    block_open = true;
                }
                block.fields.push_back({cls.tag, {cls.value}});
                active_record = &block;
                break;
            }
            case detail::LineClass::CONTINUATION: {
                if (active_record == nullptr || active_record->fields.empty()) {
                    diag(Severity::WARNING, "continuation line with no active tag skipped", line_no);
                    break;
                }
                active_record->fields.back().values.push_back(trim_right(cls.value));
                break;
            }
            case detail::LineClass::END_RECORD: {
                if (!block_open) {
                    diag(Severity::WARNING, "ER with no record content ignored", line_no);
                    break;
                }
                result.records.push_back(std::move(block));
                block = TaggedRecord{};
                block.origin = origin;
                block_open = false;
                active_record = nullptr;
                break;
            }
            case detail::LineClass::END_FILE: {
                file_ended = true;
                active_record = nullptr;
                break;
            }
            case detail::LineClass::OTHER: {
                diag(Severity::WARNING, "unrecognized line skipped", line_no);
                break;
            }
            case detail::LineClass::BLANK:
                break;
        }
    }

    if (block_open) discard_open_block();
    if (!header.fields.empty()) result.header = std::move(header);
    return result;
}

// Value lines for a tag, merged over repeated occurrences. List-per-line
// tags (AU, AF, C1, CR) yield one element per line; the semicolon-delimited
// category tags (WC, SC) are joined and split on ";". Absent tags yield an
// empty list.
inline std::vector<std::string> field_values(const TaggedRecord& record, std::string_view tag) {
    std::vector<std::string> lines;
    for (const auto& field : record.fields)
        if (field.tag == tag)
            lines.insert(lines.end(), field.values.begin(), field.values.end());
    if (lines.empty()) return {};
    if (tag == "WC" || tag == "SC") {
        std::string joined;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (i) joined += ' ';
            joined += lines[i];
        }
        std::vector<std::string> out;
        for (const auto& piece : split(joined, ';')) {
            std::string item = trim(piece);
            if (!item.empty()) out.push_back(std::move(item));
        }
        return out;
    }
    return lines;
}

// Renders a record back into the tag/continuation grammar, ER-terminated.
// parse_stream(serialize_record(r)) yields a field-identical record.
inline std::string serialize_record(const TaggedRecord& record) {
    std::string out;
    for (const auto& field : record.fields) {
        out += field.tag;
        out += ' ';
        out += field.values.front();
        out += '\n';
        for (std::size_t i = 1; i < field.values.size(); ++i) {
            out += "   ";
            out += field.values[i];
            out += '\n';
        }
    }
    out += "ER\n";
    return out;
}

inline bool operator==(const TaggedField& a, const TaggedField& b) {
    return a.tag == b.tag && a.values == b.values;
}

inline bool fields_equal(const TaggedRecord& a, const TaggedRecord& b) {
    return a.fields == b.fields;
}

} // namespace biblioscope
