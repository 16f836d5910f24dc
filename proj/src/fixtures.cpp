#include "crnet/fixtures.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "crnet/engine.hpp"
#include "crnet/oracle.hpp"

namespace crnet {
namespace fixtures {

TemporalHypergraph example_network(std::int64_t close_e1, std::int64_t close_e2,
                                   std::int64_t close_e3, std::int64_t close_e4) {
    const ObservationWindow window{TimeInstant{0}, TimeInstant{100}};
    auto channel = [&](const char* id, std::vector<ParticipantId> members, std::int64_t close) {
        return Channel{id, std::move(members), TimeInstant{0}, TimeInstant{close}};
    };
    std::vector<Channel> channels{
        channel("e1", {"v1", "v2", "v3"}, close_e1),
        channel("e2", {"v2", "v4"}, close_e2),
        channel("e3", {"v3", "v5", "v6"}, close_e3),
        channel("e4", {"v4", "v5", "v6"}, close_e4),
    };
    return build_graph(std::move(channels), window);
}

TemporalHypergraph random_network(std::uint64_t seed, unsigned max_participants,
                                  unsigned max_channels) {
    // mt19937_64 plus modulo keeps the instances identical across standard
    // library implementations; distribution bias is irrelevant here.
    std::mt19937_64 rng(seed);
    const unsigned n_participants = 2 + rng() % (max_participants - 1);
    const unsigned n_channels = 1 + rng() % max_channels;
    const ObservationWindow window{TimeInstant{0}, TimeInstant{300}};

    std::vector<Channel> channels;
    channels.reserve(n_channels);
    for (unsigned i = 0; i < n_channels; ++i) {
        Channel channel;
        channel.id = "e" + std::to_string(i + 1);
        if (!channels.empty() && rng() % 5 == 0) {
            // parallel hyperedge: same members and interval, distinct id
            channel.participants = channels.back().participants;
            channel.opened = channels.back().opened;
            channel.closed = channels.back().closed;
        } else {
            const unsigned size = 1 + rng() % std::min(5u, n_participants);
            for (unsigned k = 0; k < size; ++k) {
                channel.participants.push_back("p" + std::to_string(1 + rng() % n_participants));
            }
            normalize_participants(channel);
            // coarse close grid makes equal closes common; intervals may
            // poke past either window border to exercise clamping. The
            // first channel stays inside so the graph is never empty.
            const std::int64_t close =
                10 * (1 + static_cast<std::int64_t>(rng() % (channels.empty() ? 30 : 35)));
            const std::int64_t length = static_cast<std::int64_t>(rng() % 120);
            channel.closed = TimeInstant{close};
            channel.opened = TimeInstant{close - length};
        }
        channels.push_back(std::move(channel));
    }
    return build_graph(std::move(channels), window);
}

std::optional<std::string> compare_engine_to_oracle(const TemporalHypergraph& graph,
                                                    int hop_bias) {
    const SuccessorDag dag = build_successor_dag(graph);
    const int hop_cap = static_cast<int>(graph.channel_count());

    for (const auto& source : graph.participants()) {
        const DistanceSummary summary = source_summary(graph, dag, source);
        const auto truth =
            oracle::enumerate_journeys(graph, source, hop_cap, /*keep_journeys=*/false);

        if (summary.targets.size() != truth.distances.size()) {
            std::ostringstream msg;
            msg << "source " << source << ": engine reaches " << summary.targets.size()
                << " targets, oracle " << truth.distances.size();
            return msg.str();
        }
        for (const auto& target : summary.targets) {
            const auto it = truth.distances.find(target.target);
            if (it == truth.distances.end()) {
                return "source " + source + ": engine reaches " + target.target +
                       " but the oracle does not";
            }
            const auto& expected = it->second;
            const int engine_hops = target.min_hops + hop_bias;
            if (engine_hops != expected.min_hops ||
                target.min_duration != expected.min_duration ||
                target.earliest_arrival != expected.earliest_arrival) {
                std::ostringstream msg;
                msg << "source " << source << " target " << target.target << ": engine (hops "
                    << engine_hops << ", duration " << target.min_duration << ", arrival "
                    << target.earliest_arrival.seconds << ") vs oracle (hops "
                    << expected.min_hops << ", duration " << expected.min_duration
                    << ", arrival " << expected.earliest_arrival.seconds << ")";
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

}  // namespace fixtures
}  // namespace crnet
