#include "crnet/channel.hpp"

#include <algorithm>

#include "crnet/errors.hpp"

namespace crnet {

const char* to_string(BoundClass c) {
    switch (c) {
        case BoundClass::Bounded: return "bounded";
        case BoundClass::LeftBounded: return "left-bounded";
        case BoundClass::RightBounded: return "right-bounded";
        case BoundClass::Unbounded: return "unbounded";
    }
    return "?";
}

bool intersects(const Channel& channel, const ObservationWindow& window) {
    return channel.opened <= window.end && channel.closed >= window.start;
}

BoundClass classify_bound(const Channel& channel, const ObservationWindow& window) {
    if (!intersects(channel, window)) {
        throw NoOverlap("channel '" + channel.id + "' does not intersect the observation window");
    }
    const bool starts_inside = channel.opened >= window.start;
    const bool ends_inside = channel.closed <= window.end;
    if (starts_inside && ends_inside) return BoundClass::Bounded;
    if (starts_inside) return BoundClass::LeftBounded;
    if (ends_inside) return BoundClass::RightBounded;
    return BoundClass::Unbounded;
}

void validate_channel(const Channel& channel) {
    if (channel.id.empty()) {
        throw MalformedChannel("channel with empty id");
    }
    if (channel.opened > channel.closed) {
        throw MalformedChannel("channel '" + channel.id + "' opened after it closed");
    }
    if (channel.participants.empty()) {
        throw MalformedChannel("channel '" + channel.id + "' has no participants");
    }
    for (const auto& p : channel.participants) {
        if (p.empty()) {
            throw MalformedChannel("channel '" + channel.id + "' has an empty participant id");
        }
    }
}

void normalize_participants(Channel& channel) {
    std::sort(channel.participants.begin(), channel.participants.end());
    channel.participants.erase(
        std::unique(channel.participants.begin(), channel.participants.end()),
        channel.participants.end());
}

}  // namespace crnet
