#include "crnet/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "crnet/errors.hpp"

namespace crnet {

std::optional<std::uint32_t> TemporalHypergraph::participant_index(const ParticipantId& id) const {
    auto it = std::lower_bound(participants_.begin(), participants_.end(), id);
    if (it == participants_.end() || *it != id) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - participants_.begin());
}

TemporalHypergraph build_graph(std::vector<Channel> channels, const ObservationWindow& window) {
    if (window.start >= window.end) {
        throw MalformedChannel("observation window must satisfy start < end");
    }

    std::unordered_set<std::string> seen_ids;
    seen_ids.reserve(channels.size());
    std::vector<Channel> kept;
    kept.reserve(channels.size());

    for (auto& channel : channels) {
        validate_channel(channel);
        if (!seen_ids.insert(channel.id).second) {
            throw MalformedChannel("duplicate channel id '" + channel.id + "'");
        }
        if (!intersects(channel, window)) {
            continue;
        }
        normalize_participants(channel);
        channel.opened = std::max(channel.opened, window.start);
        channel.closed = std::min(channel.closed, window.end);
        kept.push_back(std::move(channel));
    }

    if (kept.empty()) {
        throw EmptyGraph("no channel intersects the observation window");
    }

    TemporalHypergraph graph;
    graph.window_ = window;
    graph.channels_ = std::move(kept);

    for (const auto& channel : graph.channels_) {
        graph.participants_.insert(graph.participants_.end(), channel.participants.begin(),
                                   channel.participants.end());
    }
    std::sort(graph.participants_.begin(), graph.participants_.end());
    graph.participants_.erase(
        std::unique(graph.participants_.begin(), graph.participants_.end()),
        graph.participants_.end());

    graph.members_.resize(graph.channels_.size());
    graph.incidence_.resize(graph.participants_.size());
    for (std::uint32_t ci = 0; ci < graph.channels_.size(); ++ci) {
        const auto& channel = graph.channels_[ci];
        auto& member_ids = graph.members_[ci];
        member_ids.reserve(channel.participants.size());
        for (const auto& p : channel.participants) {
            member_ids.push_back(*graph.participant_index(p));
        }
    }

    // Incidence sorted by (closed, id) so traversals and incident_channels
    // share one deterministic order.
    std::vector<std::uint32_t> order(graph.channels_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto& ca = graph.channels_[a];
        const auto& cb = graph.channels_[b];
        if (ca.closed != cb.closed) return ca.closed < cb.closed;
        return ca.id < cb.id;
    });
    for (std::uint32_t ci : order) {
        for (std::uint32_t pi : graph.members_[ci]) {
            graph.incidence_[pi].push_back(ci);
        }
    }

    return graph;
}

std::vector<Channel> incident_channels(const TemporalHypergraph& graph, const ParticipantId& p) {
    auto index = graph.participant_index(p);
    if (!index) {
        throw UnknownParticipant("unknown participant '" + p + "'");
    }
    std::vector<Channel> result;
    result.reserve(graph.incidence(*index).size());
    for (std::uint32_t ci : graph.incidence(*index)) {
        result.push_back(graph.channel(ci));
    }
    return result;
}

}  // namespace crnet
