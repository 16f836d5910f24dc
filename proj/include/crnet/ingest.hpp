#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crnet/events.hpp"
#include "crnet/graph.hpp"

namespace crnet {

inline std::set<EventKind> all_event_kinds() {
    return {EventKind::Create, EventKind::Comment, EventKind::Edit, EventKind::Approve,
            EventKind::Close};
}

struct IngestConfig {
    ObservationWindow window;
    std::vector<std::string> bot_ids;       // exact raw ids
    std::vector<std::string> bot_patterns;  // glob patterns (*, ?)
    bool anonymize = true;
    std::string salt;                        // required when anonymize is set
    std::set<EventKind> include_kinds = all_event_kinds();
};

struct IngestReport {
    std::size_t events_read = 0;
    std::size_t events_kept = 0;
    std::size_t dropped_by_bot = 0;
    std::size_t dropped_by_kind = 0;
    std::size_t dropped_by_window = 0;
    std::size_t channels_built = 0;
    std::size_t participants_kept = 0;
    std::map<BoundClass, std::size_t> bound_histogram;  // pre-clamp classes
    // Participants by distinct channel count, descending; lets users audit
    // suspiciously high-volume accounts without de-anonymizing anything.
    std::vector<std::pair<ParticipantId, std::size_t>> top_contributors;
};

struct IngestResult {
    TemporalHypergraph graph;
    std::vector<Channel> channels;  // as assembled: unclamped, for the graph file
    IngestReport report;
};

/// Raw id matches the bot list (exact ids first, then glob patterns).
bool is_bot(const std::string& raw_id, const IngestConfig& config);

/// Groups events into channels ([min event, max event] interval, distinct
/// non-bot contributors), classifies them against the window, anonymizes
/// participant ids and builds the graph. Throws SaltMissing, EmptyGraph.
IngestResult assemble_channels(const std::vector<EventRecord>& events,
                               const IngestConfig& config);

/// Window of `weeks` whole weeks starting at a Monday 00:00 UTC.
/// Throws NotAMonday; weeks < 1 throws std::invalid_argument.
ObservationWindow slice_window(int year, unsigned month, unsigned day, int weeks = 4);

/// Same, from an ISO date like "2020-02-03".
ObservationWindow slice_window(const std::string& monday, int weeks = 4);

/// One raw id or glob pattern per line; '#' starts a comment. Lines with
/// '*' or '?' become patterns, the rest exact ids.
void load_bot_file(std::istream& in, IngestConfig& config);

}  // namespace crnet
