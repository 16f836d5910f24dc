#include "crnet/ingest.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <istream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "crnet/errors.hpp"
#include "crnet/hash.hpp"

namespace crnet {

bool is_bot(const std::string& raw_id, const IngestConfig& config) {
    for (const auto& id : config.bot_ids) {
        if (raw_id == id) return true;
    }
    for (const auto& pattern : config.bot_patterns) {
        if (fnmatch(pattern.c_str(), raw_id.c_str(), 0) == 0) return true;
    }
    return false;
}

IngestResult assemble_channels(const std::vector<EventRecord>& events,
                               const IngestConfig& config) {
    if (config.anonymize && config.salt.empty()) {
        throw SaltMissing("anonymization is enabled but no salt was given");
    }

    IngestReport report;
    report.events_read = events.size();

    // Bots first, then kind filtering, then grouping by channel id.
    struct PendingChannel {
        std::vector<const EventRecord*> events;
        std::size_t order = 0;  // first-appearance order, keeps output deterministic
    };
    std::unordered_map<std::string, PendingChannel> by_channel;
    std::unordered_map<std::string, bool> bot_cache;
    std::size_t next_order = 0;

    for (const auto& event : events) {
        auto [it, inserted] = bot_cache.try_emplace(event.participant_id, false);
        if (inserted) {
            it->second = is_bot(event.participant_id, config);
        }
        if (it->second) {
            ++report.dropped_by_bot;
            continue;
        }
        if (config.include_kinds.find(event.kind) == config.include_kinds.end()) {
            ++report.dropped_by_kind;
            continue;
        }
        auto [slot, fresh] = by_channel.try_emplace(event.channel_id);
        if (fresh) {
            slot->second.order = next_order++;
        }
        slot->second.events.push_back(&event);
    }

    std::vector<const std::pair<const std::string, PendingChannel>*> ordered;
    ordered.reserve(by_channel.size());
    for (const auto& entry : by_channel) {
        ordered.push_back(&entry);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return a->second.order < b->second.order; });

    std::vector<Channel> channels;
    std::unordered_map<std::string, std::string> token_cache;
    auto token_of = [&](const std::string& raw) -> const std::string& {
        auto [it, inserted] = token_cache.try_emplace(raw);
        if (inserted) {
            it->second = config.anonymize ? anonymize_id(raw, config.salt) : raw;
        }
        return it->second;
    };

    for (const auto* entry : ordered) {
        const auto& [channel_id, pending] = *entry;
        Channel channel;
        channel.id = channel_id;
        channel.opened = pending.events.front()->timestamp;
        channel.closed = channel.opened;
        for (const auto* event : pending.events) {
            channel.opened = std::min(channel.opened, event->timestamp);
            channel.closed = std::max(channel.closed, event->timestamp);
        }
        if (!intersects(channel, config.window)) {
            report.dropped_by_window += pending.events.size();
            continue;
        }
        report.events_kept += pending.events.size();
        for (const auto* event : pending.events) {
            channel.participants.push_back(token_of(event->participant_id));
        }
        normalize_participants(channel);
        ++report.bound_histogram[classify_bound(channel, config.window)];
        channels.push_back(std::move(channel));
    }

    IngestResult result{build_graph(channels, config.window), std::move(channels),
                        std::move(report)};
    result.report.channels_built = result.graph.channel_count();
    result.report.participants_kept = result.graph.participant_count();

    std::unordered_map<std::string, std::size_t> channel_counts;
    for (const auto& channel : result.graph.channels()) {
        for (const auto& participant : channel.participants) {
            ++channel_counts[participant];
        }
    }
    auto& top = result.report.top_contributors;
    top.assign(channel_counts.begin(), channel_counts.end());
    std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (top.size() > 10) {
        top.resize(10);
    }
    return result;
}

ObservationWindow slice_window(int year, unsigned month, unsigned day, int weeks) {
    if (weeks < 1) {
        throw std::invalid_argument("slice_window needs weeks >= 1");
    }
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) {
        throw NotAMonday("not a valid date");
    }
    const std::chrono::sys_days days{ymd};
    if (std::chrono::weekday{days} != std::chrono::Monday) {
        throw NotAMonday("window must start on a Monday (UTC)");
    }
    const std::int64_t start = days.time_since_epoch().count() * kSecondsPerDay;
    return ObservationWindow{TimeInstant{start}, TimeInstant{start + weeks * kSecondsPerWeek}};
}

ObservationWindow slice_window(const std::string& monday, int weeks) {
    int year = 0;
    unsigned month = 0, day = 0;
    const char* s = monday.c_str();
    const char* end = s + monday.size();
    auto r1 = std::from_chars(s, end, year);
    if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != '-') {
        throw NotAMonday("expected an ISO date like 2020-02-03");
    }
    auto r2 = std::from_chars(r1.ptr + 1, end, month);
    if (r2.ec != std::errc() || r2.ptr == end || *r2.ptr != '-') {
        throw NotAMonday("expected an ISO date like 2020-02-03");
    }
    auto r3 = std::from_chars(r2.ptr + 1, end, day);
    if (r3.ec != std::errc() || r3.ptr != end) {
        throw NotAMonday("expected an ISO date like 2020-02-03");
    }
    return slice_window(year, month, day, weeks);
}

void load_bot_file(std::istream& in, IngestConfig& config) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t");
        line = line.substr(first, last - first + 1);
        if (line.find('*') != std::string::npos || line.find('?') != std::string::npos) {
            config.bot_patterns.push_back(line);
        } else {
            config.bot_ids.push_back(line);
        }
    }
}

}  // namespace crnet
