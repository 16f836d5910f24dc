#pragma once

#include <string>
#include <vector>

#include "crnet/time.hpp"

namespace crnet {

/// Opaque participant token (anonymized by ingestion).
using ParticipantId = std::string;

/// One code review: a hyperedge joining all its participants while the
/// review discussion is open. Active over the closed interval
/// [opened, closed]; information leaves the channel at its close.
struct Channel {
    std::string id;
    std::vector<ParticipantId> participants;  // sorted, no duplicates
    TimeInstant opened;
    TimeInstant closed;

    bool active_at(TimeInstant t) const { return opened <= t && t <= closed; }

    /// Remaining time until information exchange completes, i.e. until close.
    Duration latency_at(TimeInstant t) const { return closed - t; }

    friend bool operator==(const Channel&, const Channel&) = default;
};

/// How a channel's true lifespan relates to the observation window.
enum class BoundClass { Bounded, LeftBounded, RightBounded, Unbounded };

const char* to_string(BoundClass c);

bool intersects(const Channel& channel, const ObservationWindow& window);

/// Classifies a channel against the window using its unclamped endpoints.
/// Throws NoOverlap when the interval misses the window entirely.
BoundClass classify_bound(const Channel& channel, const ObservationWindow& window);

/// Validates per-channel invariants (non-empty id, opened <= closed,
/// non-empty participant set). Throws MalformedChannel.
void validate_channel(const Channel& channel);

/// Sorts and dedupes the participant list in place.
void normalize_participants(Channel& channel);

}  // namespace crnet
