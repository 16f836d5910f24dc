#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crnet/channel.hpp"
#include "crnet/time.hpp"

namespace crnet {

/// Undirected time-varying multi-hypergraph over an observation window.
/// Channels are stored in input order with their intervals clamped to the
/// window; parallel channels (same participants, same interval) are allowed
/// as long as their ids differ. Immutable after build_graph, so instances
/// are safe to share across threads.
class TemporalHypergraph {
public:
    const ObservationWindow& window() const { return window_; }
    const std::vector<ParticipantId>& participants() const { return participants_; }
    const std::vector<Channel>& channels() const { return channels_; }

    std::size_t participant_count() const { return participants_.size(); }
    std::size_t channel_count() const { return channels_.size(); }

    const ParticipantId& participant(std::uint32_t index) const { return participants_[index]; }
    const Channel& channel(std::uint32_t index) const { return channels_[index]; }

    std::optional<std::uint32_t> participant_index(const ParticipantId& id) const;

    /// Participant indices of one channel, ascending.
    const std::vector<std::uint32_t>& members(std::uint32_t channel_index) const {
        return members_[channel_index];
    }

    /// Channel indices containing one participant, sorted by (closed, id).
    const std::vector<std::uint32_t>& incidence(std::uint32_t participant_index) const {
        return incidence_[participant_index];
    }

private:
    friend TemporalHypergraph build_graph(std::vector<Channel> channels,
                                          const ObservationWindow& window);

    TemporalHypergraph() = default;

    ObservationWindow window_;
    std::vector<ParticipantId> participants_;            // sorted
    std::vector<Channel> channels_;                      // input order, clamped
    std::vector<std::vector<std::uint32_t>> members_;    // per channel
    std::vector<std::vector<std::uint32_t>> incidence_;  // per participant
};

/// Validates the channels, drops the ones that miss the window, clamps the
/// rest, and indexes the result. Throws MalformedChannel (bad channel or
/// duplicate id) and EmptyGraph (nothing intersects the window).
TemporalHypergraph build_graph(std::vector<Channel> channels, const ObservationWindow& window);

/// All channels containing p, sorted ascending by closed time, ties by id.
/// Throws UnknownParticipant.
std::vector<Channel> incident_channels(const TemporalHypergraph& graph, const ParticipantId& p);

}  // namespace crnet
