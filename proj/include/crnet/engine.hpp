#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crnet/successor_dag.hpp"

namespace crnet {

/// A time-respecting walk of channels. Consecutive channels share a
/// participant and close times strictly increase along the hops; ties do
/// not chain. Departure is the close of the first channel, arrival the
/// close of the last, so single-hop journeys have zero duration.
struct Journey {
    std::vector<std::string> hops;  // channel ids, in order
    TimeInstant departure;
    TimeInstant arrival;

    std::size_t hop_count() const { return hops.size(); }
    Duration duration() const { return arrival - departure; }
};

struct TargetDistance {
    ParticipantId target;
    int min_hops = 0;
    Duration min_duration = 0;
    TimeInstant earliest_arrival;

    friend bool operator==(const TargetDistance&, const TargetDistance&) = default;
};

/// Per-source diffusion minima. Targets are sorted ascending and never
/// include the source itself; horizon_size is the number of targets.
struct DistanceSummary {
    ParticipantId source;
    std::vector<TargetDistance> targets;

    std::size_t horizon_size() const { return targets.size(); }
    const TargetDistance* find(const ParticipantId& target) const;

    friend bool operator==(const DistanceSummary&, const DistanceSummary&) = default;
};

/// Minimum number of channels over all journeys from source, per reachable
/// target. Unreachable targets are absent. Throws UnknownParticipant.
std::map<ParticipantId, int> shortest_distances(const TemporalHypergraph& graph,
                                                const SuccessorDag& dag,
                                                const ParticipantId& source);

/// Minimum journey duration (arrival close minus departure close), per
/// reachable target. Throws UnknownParticipant.
std::map<ParticipantId, Duration> fastest_distances(const TemporalHypergraph& graph,
                                                    const SuccessorDag& dag,
                                                    const ParticipantId& source);

/// Earliest absolute arrival over journeys whose first channel closes at or
/// after `from`. Throws UnknownParticipant.
std::map<ParticipantId, TimeInstant> foremost_arrivals(const TemporalHypergraph& graph,
                                                       const SuccessorDag& dag,
                                                       const ParticipantId& source,
                                                       TimeInstant from);

/// Set of participants reachable from source; source excluded.
std::set<ParticipantId> horizon(const TemporalHypergraph& graph, const SuccessorDag& dag,
                                const ParticipantId& source);

/// For each grid instant t, how many targets have a foremost arrival
/// (from = window.start) at or before t. Non-decreasing; the final value at
/// window.end equals the horizon size. Throws UnknownParticipant, EmptyGrid.
std::vector<std::pair<TimeInstant, std::size_t>> horizon_growth(
    const TemporalHypergraph& graph, const SuccessorDag& dag, const ParticipantId& source,
    const std::vector<TimeInstant>& grid);

/// One DistanceSummary per participant (earliest_arrival uses
/// from = window.start), combining the three distance operations.
DistanceSummary source_summary(const TemporalHypergraph& graph, const SuccessorDag& dag,
                               const ParticipantId& source);

/// Streams summaries for every participant in ascending id order. Sources
/// are computed independently on `workers` threads (0 = hardware
/// concurrency); the callback runs on the calling thread and the emission
/// order and contents do not depend on the worker count.
void for_each_summary(const TemporalHypergraph& graph, const SuccessorDag& dag,
                      unsigned workers,
                      const std::function<void(DistanceSummary&&)>& callback);

std::vector<DistanceSummary> all_sources_summary(const TemporalHypergraph& graph,
                                                 const SuccessorDag& dag, unsigned workers = 0);

/// Witness mode: reconstructs one minimum-hop journey from source to
/// target, the one with the lexicographically smallest channel-id sequence.
/// Returns nullopt when the target is unreachable. Throws UnknownParticipant.
std::optional<Journey> shortest_witness(const TemporalHypergraph& graph, const SuccessorDag& dag,
                                        const ParticipantId& source, const ParticipantId& target);

}  // namespace crnet
