#pragma once

#include <compare>
#include <cstdint>

namespace crnet {

/// Elapsed time in whole seconds.
using Duration = std::int64_t;

inline constexpr Duration kSecondsPerDay = 86400;
inline constexpr Duration kSecondsPerWeek = 7 * kSecondsPerDay;

/// A point in time: whole seconds since the Unix epoch, UTC.
struct TimeInstant {
    std::int64_t seconds = 0;

    friend constexpr auto operator<=>(const TimeInstant&, const TimeInstant&) = default;

    friend constexpr Duration operator-(TimeInstant a, TimeInstant b) {
        return a.seconds - b.seconds;
    }
    friend constexpr TimeInstant operator+(TimeInstant t, Duration d) {
        return TimeInstant{t.seconds + d};
    }
    friend constexpr TimeInstant operator-(TimeInstant t, Duration d) {
        return TimeInstant{t.seconds - d};
    }
};

/// The interval interactions are observed in. Ingestion defaults produce
/// whole Monday-to-Sunday weeks; any start < end is accepted here.
struct ObservationWindow {
    TimeInstant start;
    TimeInstant end;

    constexpr Duration length() const { return end - start; }
    constexpr bool contains(TimeInstant t) const { return start <= t && t <= end; }

    friend constexpr bool operator==(const ObservationWindow&, const ObservationWindow&) = default;
};

}  // namespace crnet
