#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "crnet/graph.hpp"

namespace crnet {
namespace oracle {

struct OracleDistances {
    int min_hops = 0;
    Duration min_duration = 0;
    TimeInstant earliest_arrival;
};

/// Exhaustive enumeration result for one source. Deliberately naive ground
/// truth for the engine; do not use above ~15 channels.
struct OracleResult {
    ParticipantId source;
    std::map<ParticipantId, OracleDistances> distances;
    /// Every enumerated journey as a channel-index sequence (graph channel
    /// order), present when keep_journeys was set.
    std::vector<std::vector<std::uint32_t>> journeys;

    std::vector<std::vector<std::string>> journey_ids(const TemporalHypergraph& graph) const;
};

/// Depth-first expansion of all channel sequences starting at the source's
/// channels, extending only to intersecting channels with strictly larger
/// close time. With hop_cap >= channel count the result is exact, since
/// close times strictly increase and no journey revisits a channel.
/// Throws UnknownParticipant; hop_cap < 1 throws std::invalid_argument.
OracleResult enumerate_journeys(const TemporalHypergraph& graph, const ParticipantId& source,
                                int hop_cap, bool keep_journeys = true);

}  // namespace oracle
}  // namespace crnet
