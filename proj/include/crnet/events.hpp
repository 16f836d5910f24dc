#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crnet/time.hpp"

namespace crnet {

/// Non-trivial contributions to a code review discussion. Tool-specific
/// reactions (emojis, likes) are not interactions and are rejected at parse
/// time.
enum class EventKind { Create, Comment, Edit, Approve, Close };

const char* to_string(EventKind kind);
std::optional<EventKind> parse_kind(std::string_view text);

/// One raw interaction, pre-anonymization.
struct EventRecord {
    std::string channel_id;
    std::string participant_id;
    TimeInstant timestamp;
    EventKind kind = EventKind::Comment;
};

enum class EventFormat { Csv, JsonLines };

/// Picks Csv for .csv, JsonLines for .jsonl/.ndjson/.json.
EventFormat detect_format(const std::filesystem::path& path);

struct ParseIssue {
    std::size_t line = 0;  // 1-based
    std::string reason;
    bool unknown_kind = false;
};

struct ParsedEvents {
    std::vector<EventRecord> events;  // file order
    std::vector<ParseIssue> issues;   // malformed rows, with line numbers
    std::size_t lines_read = 0;       // data rows seen (header excluded)
};

/// Reads an event stream. Malformed rows are collected as issues rather
/// than silently dropped; well-formed rows around them are still returned.
/// CSV needs a header naming channel_id, participant_id, timestamp, kind
/// (any column order); timestamps are integer epoch seconds or RFC-3339,
/// auto-detected on the first row and enforced for the rest of the file.
/// Throws ParseError for unusable input (e.g. a broken header).
ParsedEvents parse_events(std::istream& in, EventFormat format);

/// As parse_events, but the first malformed row raises UnknownKind or
/// ParseError with its line number.
std::vector<EventRecord> parse_events_strict(std::istream& in, EventFormat format);

/// RFC-3339 timestamp (e.g. 2020-02-03T09:30:00Z, offsets and fractional
/// seconds accepted; fractions truncate to whole seconds).
std::optional<TimeInstant> parse_rfc3339(std::string_view text);

}  // namespace crnet
