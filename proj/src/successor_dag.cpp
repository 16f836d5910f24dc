#include "crnet/successor_dag.hpp"

#include <algorithm>

namespace crnet {

SuccessorDag::SuccessorDag(const TemporalHypergraph& graph) : graph_(&graph) {
    const std::size_t n_channels = graph.channel_count();
    const std::size_t n_participants = graph.participant_count();

    close_.resize(n_channels);
    for (std::uint32_t ci = 0; ci < n_channels; ++ci) {
        close_[ci] = graph.channel(ci).closed.seconds;
    }

    mem_offsets_.assign(n_channels + 1, 0);
    for (std::uint32_t ci = 0; ci < n_channels; ++ci) {
        mem_offsets_[ci + 1] = mem_offsets_[ci] + graph.members(ci).size();
    }
    mem_parts_.reserve(mem_offsets_.back());
    for (std::uint32_t ci = 0; ci < n_channels; ++ci) {
        const auto& members = graph.members(ci);
        mem_parts_.insert(mem_parts_.end(), members.begin(), members.end());
    }

    inc_offsets_.assign(n_participants + 1, 0);
    for (std::uint32_t pi = 0; pi < n_participants; ++pi) {
        inc_offsets_[pi + 1] = inc_offsets_[pi] + graph.incidence(pi).size();
    }
    inc_channels_.reserve(inc_offsets_.back());
    inc_closes_.reserve(inc_offsets_.back());
    for (std::uint32_t pi = 0; pi < n_participants; ++pi) {
        for (std::uint32_t ci : graph.incidence(pi)) {
            inc_channels_.push_back(ci);
            inc_closes_.push_back(close_[ci]);
        }
    }
}

std::vector<std::uint32_t> SuccessorDag::successors_of(std::uint32_t channel) const {
    std::vector<std::uint32_t> result;
    const std::int64_t close = close_[channel];
    for (std::uint32_t pi : channel_members(channel)) {
        const auto closes = participant_closes(pi);
        const auto channels = participant_channels(pi);
        auto first = std::upper_bound(closes.begin(), closes.end(), close);
        for (auto it = first; it != closes.end(); ++it) {
            result.push_back(channels[it - closes.begin()]);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool SuccessorDag::has_arc(std::uint32_t from, std::uint32_t to) const {
    if (close_[to] <= close_[from]) {
        return false;
    }
    auto a = channel_members(from);
    auto b = channel_members(to);
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

std::size_t SuccessorDag::arc_count() const {
    std::size_t total = 0;
    for (std::uint32_t ci = 0; ci < close_.size(); ++ci) {
        total += successors_of(ci).size();
    }
    return total;
}

SuccessorDag build_successor_dag(const TemporalHypergraph& graph) {
    return SuccessorDag(graph);
}

}  // namespace crnet
