#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crnet/graph.hpp"

namespace crnet {

/// Channel-level successor relation: arc e -> e' exactly when the two
/// channels share a participant and e' closes strictly later. Information
/// transits a channel only at its close, so a follow-on channel is usable
/// iff it is still active strictly after the predecessor's close; for
/// overlapping-membership channels that reduces to closed(e') > closed(e).
/// Arcs strictly increase close time, hence the graph is acyclic.
///
/// Arcs are not materialized; per-participant incidence lists sorted by
/// close time answer successor queries and drive the engine's traversals.
class SuccessorDag {
public:
    explicit SuccessorDag(const TemporalHypergraph& graph);

    const TemporalHypergraph& graph() const { return *graph_; }

    std::size_t channel_count() const { return close_.size(); }

    std::int64_t close_of(std::uint32_t channel) const { return close_[channel]; }

    /// Successor channel indices, ascending, deduplicated.
    std::vector<std::uint32_t> successors_of(std::uint32_t channel) const;

    bool has_arc(std::uint32_t from, std::uint32_t to) const;

    /// Total number of arcs; enumerates, intended for small graphs and tests.
    std::size_t arc_count() const;

    // Flat index structures used by the traversal engine.
    std::span<const std::uint32_t> channel_members(std::uint32_t channel) const {
        return {mem_parts_.data() + mem_offsets_[channel],
                mem_parts_.data() + mem_offsets_[channel + 1]};
    }
    std::span<const std::uint32_t> participant_channels(std::uint32_t participant) const {
        return {inc_channels_.data() + inc_offsets_[participant],
                inc_channels_.data() + inc_offsets_[participant + 1]};
    }
    std::span<const std::int64_t> participant_closes(std::uint32_t participant) const {
        return {inc_closes_.data() + inc_offsets_[participant],
                inc_closes_.data() + inc_offsets_[participant + 1]};
    }

private:
    const TemporalHypergraph* graph_;
    std::vector<std::int64_t> close_;          // per channel
    std::vector<std::size_t> mem_offsets_;     // channel -> [begin, end) in mem_parts_
    std::vector<std::uint32_t> mem_parts_;
    std::vector<std::size_t> inc_offsets_;     // participant -> [begin, end) in inc_*
    std::vector<std::uint32_t> inc_channels_;  // sorted by (close, id) per participant
    std::vector<std::int64_t> inc_closes_;
};

SuccessorDag build_successor_dag(const TemporalHypergraph& graph);

}  // namespace crnet
