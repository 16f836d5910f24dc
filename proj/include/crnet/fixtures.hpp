#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crnet/graph.hpp"

namespace crnet {
namespace fixtures {

/// The six-participant, four-channel example network:
///   e1 = {v1,v2,v3}, e2 = {v2,v4}, e3 = {v3,v5,v6}, e4 = {v4,v5,v6},
/// all opened at the window start, closed at the given times.
TemporalHypergraph example_network(std::int64_t close_e1, std::int64_t close_e2,
                                   std::int64_t close_e3, std::int64_t close_e4);

/// Small random instance for oracle equivalence: at most `max_participants`
/// vertices and `max_channels` channels, coarse close times so ties are
/// common, occasional parallel hyperedges, intervals that can cross the
/// window border. Deterministic for a given seed across platforms.
TemporalHypergraph random_network(std::uint64_t seed, unsigned max_participants = 12,
                                  unsigned max_channels = 15);

/// Runs the full engine against the brute-force enumerator for every source
/// and compares min_hops, min_duration and earliest_arrival exactly.
/// Returns a description of the first mismatch, or nullopt when they agree.
/// hop_bias shifts the engine's hop counts before comparing; nonzero values
/// force a mismatch and exist so the failure path itself can be exercised.
std::optional<std::string> compare_engine_to_oracle(const TemporalHypergraph& graph,
                                                    int hop_bias = 0);

}  // namespace fixtures
}  // namespace crnet
