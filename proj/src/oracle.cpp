#include "crnet/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "crnet/errors.hpp"

namespace crnet {
namespace oracle {

namespace {

bool share_participant(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return false;
}

struct Enumerator {
    const TemporalHypergraph& graph;
    std::uint32_t source;
    int hop_cap;
    bool keep_journeys;

    std::vector<std::uint32_t> current;
    std::vector<std::vector<std::uint32_t>> journeys;
    // Per participant index; kNo means unreached.
    std::vector<int> min_hops;
    std::vector<Duration> min_duration;
    std::vector<std::int64_t> earliest;

    static constexpr int kNo = std::numeric_limits<int>::max();

    explicit Enumerator(const TemporalHypergraph& g, std::uint32_t s, int cap, bool keep)
        : graph(g), source(s), hop_cap(cap), keep_journeys(keep) {
        min_hops.assign(g.participant_count(), kNo);
        min_duration.assign(g.participant_count(), std::numeric_limits<Duration>::max());
        earliest.assign(g.participant_count(), std::numeric_limits<std::int64_t>::max());
    }

    void record() {
        if (keep_journeys) {
            journeys.push_back(current);
        }
        const std::uint32_t first = current.front();
        const std::uint32_t last = current.back();
        const auto hops = static_cast<int>(current.size());
        const Duration duration =
            graph.channel(last).closed - graph.channel(first).closed;
        for (std::uint32_t member : graph.members(last)) {
            if (member == source) continue;
            min_hops[member] = std::min(min_hops[member], hops);
            min_duration[member] = std::min(min_duration[member], duration);
            earliest[member] = std::min(earliest[member], graph.channel(last).closed.seconds);
        }
    }

    void extend(std::uint32_t channel) {
        current.push_back(channel);
        record();
        if (static_cast<int>(current.size()) < hop_cap) {
            const TimeInstant close = graph.channel(channel).closed;
            for (std::uint32_t next = 0; next < graph.channel_count(); ++next) {
                if (graph.channel(next).closed <= close) continue;
                if (!share_participant(graph.members(channel), graph.members(next))) continue;
                extend(next);
            }
        }
        current.pop_back();
    }
};

}  // namespace

std::vector<std::vector<std::string>> OracleResult::journey_ids(
    const TemporalHypergraph& graph) const {
    std::vector<std::vector<std::string>> out;
    out.reserve(journeys.size());
    for (const auto& journey : journeys) {
        std::vector<std::string> ids;
        ids.reserve(journey.size());
        for (std::uint32_t c : journey) {
            ids.push_back(graph.channel(c).id);
        }
        out.push_back(std::move(ids));
    }
    return out;
}

OracleResult enumerate_journeys(const TemporalHypergraph& graph, const ParticipantId& source,
                                int hop_cap, bool keep_journeys) {
    if (hop_cap < 1) {
        throw std::invalid_argument("enumerate_journeys requires hop_cap >= 1");
    }
    auto index = graph.participant_index(source);
    if (!index) {
        throw UnknownParticipant("unknown participant '" + source + "'");
    }

    Enumerator e(graph, *index, hop_cap, keep_journeys);
    for (std::uint32_t channel = 0; channel < graph.channel_count(); ++channel) {
        const auto& members = graph.members(channel);
        if (std::binary_search(members.begin(), members.end(), *index)) {
            e.extend(channel);
        }
    }

    OracleResult result;
    result.source = source;
    result.journeys = std::move(e.journeys);
    for (std::uint32_t pi = 0; pi < graph.participant_count(); ++pi) {
        if (e.min_hops[pi] == Enumerator::kNo) continue;
        result.distances.emplace(
            graph.participant(pi),
            OracleDistances{e.min_hops[pi], e.min_duration[pi], TimeInstant{e.earliest[pi]}});
    }
    return result;
}

}  // namespace oracle
}  // namespace crnet
