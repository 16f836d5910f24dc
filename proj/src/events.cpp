#include "crnet/events.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <istream>

#include <json.hpp>

#include "crnet/errors.hpp"

namespace crnet {

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Create: return "create";
        case EventKind::Comment: return "comment";
        case EventKind::Edit: return "edit";
        case EventKind::Approve: return "approve";
        case EventKind::Close: return "close";
    }
    return "?";
}

std::optional<EventKind> parse_kind(std::string_view text) {
    if (text == "create") return EventKind::Create;
    if (text == "comment") return EventKind::Comment;
    if (text == "edit") return EventKind::Edit;
    if (text == "approve") return EventKind::Approve;
    if (text == "close") return EventKind::Close;
    return std::nullopt;
}

EventFormat detect_format(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".csv") return EventFormat::Csv;
    return EventFormat::JsonLines;
}

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::optional<std::int64_t> civil_to_epoch_days(int year, unsigned month, unsigned day) {
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) return std::nullopt;
    return std::chrono::sys_days{ymd}.time_since_epoch().count();
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

enum class TimestampMode { Undecided, Epoch, Rfc3339 };

std::optional<TimeInstant> parse_timestamp(std::string_view text, TimestampMode& mode) {
    const bool looks_integer = is_integer_token(text);
    if (mode == TimestampMode::Undecided) {
        mode = looks_integer ? TimestampMode::Epoch : TimestampMode::Rfc3339;
    }
    if (mode == TimestampMode::Epoch) {
        if (!looks_integer) return std::nullopt;
        auto value = parse_int(text);
        if (!value) return std::nullopt;
        return TimeInstant{*value};
    }
    if (looks_integer) return std::nullopt;  // mixed styles in one file
    return parse_rfc3339(text);
}

struct CsvHeader {
    std::size_t channel_id = 0;
    std::size_t participant_id = 0;
    std::size_t timestamp = 0;
    std::size_t kind = 0;
    std::size_t min_fields = 0;
};

CsvHeader parse_csv_header(std::string_view line) {
    const auto fields = split_csv_line(line);
    CsvHeader header;
    bool have_channel = false, have_participant = false, have_timestamp = false,
         have_kind = false;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "channel_id") {
            header.channel_id = i;
            have_channel = true;
        } else if (fields[i] == "participant_id") {
            header.participant_id = i;
            have_participant = true;
        } else if (fields[i] == "timestamp") {
            header.timestamp = i;
            have_timestamp = true;
        } else if (fields[i] == "kind") {
            header.kind = i;
            have_kind = true;
        }
    }
    if (!(have_channel && have_participant && have_timestamp && have_kind)) {
        throw ParseError(1,
                         "CSV header must name channel_id, participant_id, timestamp and kind");
    }
    header.min_fields = 1 + std::max({header.channel_id, header.participant_id, header.timestamp,
                                      header.kind});
    return header;
}

ParsedEvents parse_csv(std::istream& in) {
    ParsedEvents result;
    std::string line;
    if (!std::getline(in, line)) {
        return result;  // empty file, empty stream
    }
    strip_cr(line);
    const CsvHeader header = parse_csv_header(line);

    TimestampMode mode = TimestampMode::Undecided;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        ++result.lines_read;
        const auto fields = split_csv_line(line);
        if (fields.size() < header.min_fields) {
            result.issues.push_back({line_no, "expected at least " +
                                                  std::to_string(header.min_fields) + " fields, got " +
                                                  std::to_string(fields.size()),
                                     false});
            continue;
        }
        EventRecord record;
        record.channel_id = std::string(fields[header.channel_id]);
        record.participant_id = std::string(fields[header.participant_id]);
        if (record.channel_id.empty() || record.participant_id.empty()) {
            result.issues.push_back({line_no, "empty channel_id or participant_id", false});
            continue;
        }
        const auto kind = parse_kind(fields[header.kind]);
        if (!kind) {
            result.issues.push_back(
                {line_no, "unknown kind '" + std::string(fields[header.kind]) + "'", true});
            continue;
        }
        record.kind = *kind;
        const auto ts = parse_timestamp(fields[header.timestamp], mode);
        if (!ts) {
            result.issues.push_back(
                {line_no, "bad timestamp '" + std::string(fields[header.timestamp]) + "'", false});
            continue;
        }
        record.timestamp = *ts;
        result.events.push_back(std::move(record));
    }
    return result;
}

ParsedEvents parse_jsonl(std::istream& in) {
    ParsedEvents result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        ++result.lines_read;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            result.issues.push_back({line_no, std::string("bad JSON: ") + e.what(), false});
            continue;
        }
        EventRecord record;
        try {
            record.channel_id = j.at("channel_id").get<std::string>();
            record.participant_id = j.at("participant_id").get<std::string>();
            const auto& ts = j.at("timestamp");
            if (ts.is_number_integer()) {
                record.timestamp = TimeInstant{ts.get<std::int64_t>()};
            } else if (ts.is_string()) {
                const auto text = ts.get<std::string>();
                std::optional<TimeInstant> parsed;
                if (is_integer_token(text)) {
                    if (auto v = parse_int(text)) parsed = TimeInstant{*v};
                } else {
                    parsed = parse_rfc3339(text);
                }
                if (!parsed) {
                    result.issues.push_back({line_no, "bad timestamp '" + text + "'", false});
                    continue;
                }
                record.timestamp = *parsed;
            } else {
                result.issues.push_back({line_no, "timestamp must be integer or string", false});
                continue;
            }
            const auto kind_text = j.at("kind").get<std::string>();
            const auto kind = parse_kind(kind_text);
            if (!kind) {
                result.issues.push_back({line_no, "unknown kind '" + kind_text + "'", true});
                continue;
            }
            record.kind = *kind;
        } catch (const nlohmann::json::exception& e) {
            result.issues.push_back({line_no, std::string("schema: ") + e.what(), false});
            continue;
        }
        if (record.channel_id.empty() || record.participant_id.empty()) {
            result.issues.push_back({line_no, "empty channel_id or participant_id", false});
            continue;
        }
        result.events.push_back(std::move(record));
    }
    return result;
}

}  // namespace

std::optional<TimeInstant> parse_rfc3339(std::string_view text) {
    // YYYY-MM-DD[Tt ]HH:MM:SS[.frac](Z|z|±HH:MM)
    if (text.size() < 20) return std::nullopt;
    auto digit = [&](std::size_t i) { return std::isdigit(static_cast<unsigned char>(text[i])); };
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u, 11u, 12u, 14u, 15u, 17u, 18u}) {
        if (!digit(i)) return std::nullopt;
    }
    if (text[4] != '-' || text[7] != '-') return std::nullopt;
    if (text[10] != 'T' && text[10] != 't' && text[10] != ' ') return std::nullopt;
    if (text[13] != ':' || text[16] != ':') return std::nullopt;

    auto num = [&](std::size_t pos, std::size_t len) {
        int value = 0;
        for (std::size_t i = pos; i < pos + len; ++i) value = value * 10 + (text[i] - '0');
        return value;
    };
    const int year = num(0, 4);
    const int month = num(5, 2);
    const int day = num(8, 2);
    const int hour = num(11, 2);
    const int minute = num(14, 2);
    const int second = num(17, 2);
    if (hour > 23 || minute > 59 || second > 60) return std::nullopt;

    std::size_t i = 19;
    if (i < text.size() && text[i] == '.') {
        ++i;
        if (i >= text.size() || !digit(i)) return std::nullopt;
        while (i < text.size() && digit(i)) ++i;  // truncate fractional seconds
    }
    if (i >= text.size()) return std::nullopt;

    std::int64_t offset_seconds = 0;
    if (text[i] == 'Z' || text[i] == 'z') {
        if (i + 1 != text.size()) return std::nullopt;
    } else if (text[i] == '+' || text[i] == '-') {
        if (i + 6 != text.size()) return std::nullopt;
        if (!digit(i + 1) || !digit(i + 2) || text[i + 3] != ':' || !digit(i + 4) ||
            !digit(i + 5)) {
            return std::nullopt;
        }
        const int oh = (text[i + 1] - '0') * 10 + (text[i + 2] - '0');
        const int om = (text[i + 4] - '0') * 10 + (text[i + 5] - '0');
        if (oh > 23 || om > 59) return std::nullopt;
        offset_seconds = static_cast<std::int64_t>(oh) * 3600 + om * 60;
        if (text[i] == '-') offset_seconds = -offset_seconds;
    } else {
        return std::nullopt;
    }

    const auto days = civil_to_epoch_days(year, static_cast<unsigned>(month),
                                          static_cast<unsigned>(day));
    if (!days) return std::nullopt;
    const std::int64_t local =
        *days * kSecondsPerDay + hour * 3600 + minute * 60 + std::min(second, 59);
    return TimeInstant{local - offset_seconds};
}

ParsedEvents parse_events(std::istream& in, EventFormat format) {
    return format == EventFormat::Csv ? parse_csv(in) : parse_jsonl(in);
}

std::vector<EventRecord> parse_events_strict(std::istream& in, EventFormat format) {
    auto parsed = parse_events(in, format);
    if (!parsed.issues.empty()) {
        const auto& first = parsed.issues.front();
        if (first.unknown_kind) {
            throw UnknownKind(first.line, first.reason);
        }
        throw ParseError(first.line, first.reason);
    }
    return std::move(parsed.events);
}

}  // namespace crnet
