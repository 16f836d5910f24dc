#include "crnet/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <thread>

#include "crnet/errors.hpp"

namespace crnet {

namespace {

constexpr std::int64_t kNoTime = std::numeric_limits<std::int64_t>::max();
constexpr std::int32_t kNoHops = std::numeric_limits<std::int32_t>::max();

std::uint32_t require_participant(const TemporalHypergraph& graph, const ParticipantId& id) {
    auto index = graph.participant_index(id);
    if (!index) {
        throw UnknownParticipant("unknown participant '" + id + "'");
    }
    return *index;
}

// Reusable traversal state. Epoch stamping keeps per-source setup O(1)
// instead of clearing every array between sources.
struct SweepScratch {
    std::vector<std::uint32_t> ch_stamp;
    std::vector<std::int32_t> ch_level;
    std::vector<std::uint32_t> exp_stamp;
    std::vector<std::int64_t> expanded_to;
    std::vector<std::uint32_t> tgt_stamp;
    std::vector<std::int32_t> tgt_hops;
    std::vector<Duration> tgt_dur;
    std::vector<std::int64_t> tgt_arr;
    std::vector<std::uint32_t> queue;
    std::vector<std::uint32_t> touched;
    std::uint32_t sweep_epoch = 0;
    std::uint32_t source_epoch = 0;

    void bind(const SuccessorDag& dag) {
        ch_stamp.resize(dag.channel_count(), 0);
        ch_level.resize(dag.channel_count());
        exp_stamp.resize(dag.graph().participant_count(), 0);
        expanded_to.resize(dag.graph().participant_count());
        tgt_stamp.resize(dag.graph().participant_count(), 0);
        tgt_hops.resize(dag.graph().participant_count());
        tgt_dur.resize(dag.graph().participant_count());
        tgt_arr.resize(dag.graph().participant_count());
    }

    bool visited(std::uint32_t channel) const { return ch_stamp[channel] == sweep_epoch; }

    void touch_target(std::uint32_t participant) {
        if (tgt_stamp[participant] != source_epoch) {
            tgt_stamp[participant] = source_epoch;
            tgt_hops[participant] = kNoHops;
            tgt_dur[participant] = kNoTime;
            tgt_arr[participant] = kNoTime;
            touched.push_back(participant);
        }
    }
};

// Visits every unvisited channel of `participant` whose close lies in
// (threshold, expanded_to]; the invariant is that channels above the stored
// threshold are already visited, so segments never rescan.
template <typename Visit>
void expand_participant(const SuccessorDag& dag, SweepScratch& s, std::uint32_t participant,
                        std::int64_t threshold, const Visit& visit) {
    std::int64_t upper = kNoTime;
    if (s.exp_stamp[participant] == s.sweep_epoch) {
        upper = s.expanded_to[participant];
        if (threshold >= upper) {
            return;
        }
    }
    const auto closes = dag.participant_closes(participant);
    const auto channels = dag.participant_channels(participant);
    auto it = std::upper_bound(closes.begin(), closes.end(), threshold);
    for (; it != closes.end() && *it <= upper; ++it) {
        const std::uint32_t channel = channels[it - closes.begin()];
        if (!s.visited(channel)) {
            visit(channel);
        }
    }
    s.expanded_to[participant] = threshold;
    s.exp_stamp[participant] = s.sweep_epoch;
}

// Breadth-first layering over the successor relation; records the minimum
// hop count per reachable participant.
void sweep_hops(const SuccessorDag& dag, std::uint32_t source, SweepScratch& s) {
    ++s.sweep_epoch;
    s.queue.clear();

    auto visit = [&](std::uint32_t channel, std::int32_t level) {
        s.ch_stamp[channel] = s.sweep_epoch;
        s.ch_level[channel] = level;
        s.queue.push_back(channel);
        for (std::uint32_t member : dag.channel_members(channel)) {
            if (member == source) continue;
            s.touch_target(member);
            s.tgt_hops[member] = std::min(s.tgt_hops[member], level);
        }
    };

    for (std::uint32_t channel : dag.participant_channels(source)) {
        visit(channel, 1);
    }
    // Every channel of the source is now level 1 regardless of close time.
    s.expanded_to[source] = std::numeric_limits<std::int64_t>::min();
    s.exp_stamp[source] = s.sweep_epoch;

    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        const std::uint32_t channel = s.queue[head];
        const std::int32_t next_level = s.ch_level[channel] + 1;
        const std::int64_t close = dag.close_of(channel);
        for (std::uint32_t member : dag.channel_members(channel)) {
            expand_participant(dag, s, member, close,
                               [&](std::uint32_t c) { visit(c, next_level); });
        }
    }
}

// One sweep covering fastest durations and foremost arrivals. Start
// channels are processed in descending close order so the first visit of a
// channel pins the latest possible departure, which minimizes the duration
// for every arrival through it.
void sweep_durations(const SuccessorDag& dag, std::uint32_t source, std::int64_t from,
                     SweepScratch& s, bool record_durations) {
    ++s.sweep_epoch;
    s.queue.clear();

    std::int64_t start_close = 0;
    auto visit = [&](std::uint32_t channel) {
        s.ch_stamp[channel] = s.sweep_epoch;
        s.queue.push_back(channel);
        const std::int64_t close = dag.close_of(channel);
        for (std::uint32_t member : dag.channel_members(channel)) {
            if (member == source) continue;
            s.touch_target(member);
            if (record_durations) {
                s.tgt_dur[member] = std::min(s.tgt_dur[member], close - start_close);
            }
            s.tgt_arr[member] = std::min(s.tgt_arr[member], close);
        }
    };

    const auto starts = dag.participant_channels(source);
    const auto start_closes = dag.participant_closes(source);
    for (std::size_t i = starts.size(); i-- > 0;) {
        if (start_closes[i] < from) break;  // ascending storage; rest are earlier
        const std::uint32_t start = starts[i];
        if (s.visited(start)) continue;  // unreachable for starts, kept as a guard
        start_close = start_closes[i];
        const std::size_t tail = s.queue.size();
        visit(start);
        for (std::size_t head = tail; head < s.queue.size(); ++head) {
            const std::uint32_t channel = s.queue[head];
            const std::int64_t close = dag.close_of(channel);
            for (std::uint32_t member : dag.channel_members(channel)) {
                expand_participant(dag, s, member, close, visit);
            }
        }
    }
}

// Index-level result for one source; targets ascending.
struct SourceResult {
    std::vector<std::uint32_t> targets;
    std::vector<std::int32_t> hops;
    std::vector<Duration> durations;
    std::vector<std::int64_t> arrivals;
};

void compute_source(const SuccessorDag& dag, std::uint32_t source, SweepScratch& s,
                    SourceResult& out) {
    ++s.source_epoch;
    s.touched.clear();

    sweep_hops(dag, source, s);
    sweep_durations(dag, source, std::numeric_limits<std::int64_t>::min(), s, true);

    std::sort(s.touched.begin(), s.touched.end());
    out.targets.clear();
    out.hops.clear();
    out.durations.clear();
    out.arrivals.clear();
    out.targets.reserve(s.touched.size());
    for (std::uint32_t v : s.touched) {
        assert(s.tgt_hops[v] != kNoHops && s.tgt_dur[v] != kNoTime);
        out.targets.push_back(v);
        out.hops.push_back(s.tgt_hops[v]);
        out.durations.push_back(s.tgt_dur[v]);
        out.arrivals.push_back(s.tgt_arr[v]);
    }
}

DistanceSummary to_summary(const TemporalHypergraph& graph, std::uint32_t source,
                           const SourceResult& r) {
    DistanceSummary summary;
    summary.source = graph.participant(source);
    summary.targets.reserve(r.targets.size());
    for (std::size_t i = 0; i < r.targets.size(); ++i) {
        summary.targets.push_back(TargetDistance{graph.participant(r.targets[i]), r.hops[i],
                                                 r.durations[i], TimeInstant{r.arrivals[i]}});
    }
    return summary;
}

}  // namespace

const TargetDistance* DistanceSummary::find(const ParticipantId& target) const {
    auto it = std::lower_bound(targets.begin(), targets.end(), target,
                               [](const TargetDistance& d, const ParticipantId& id) {
                                   return d.target < id;
                               });
    if (it == targets.end() || it->target != target) {
        return nullptr;
    }
    return &*it;
}

std::map<ParticipantId, int> shortest_distances(const TemporalHypergraph& graph,
                                                const SuccessorDag& dag,
                                                const ParticipantId& source) {
    const std::uint32_t s = require_participant(graph, source);
    SweepScratch scratch;
    scratch.bind(dag);
    SourceResult r;
    compute_source(dag, s, scratch, r);
    std::map<ParticipantId, int> result;
    for (std::size_t i = 0; i < r.targets.size(); ++i) {
        result.emplace(graph.participant(r.targets[i]), r.hops[i]);
    }
    return result;
}

std::map<ParticipantId, Duration> fastest_distances(const TemporalHypergraph& graph,
                                                    const SuccessorDag& dag,
                                                    const ParticipantId& source) {
    const std::uint32_t s = require_participant(graph, source);
    SweepScratch scratch;
    scratch.bind(dag);
    SourceResult r;
    compute_source(dag, s, scratch, r);
    std::map<ParticipantId, Duration> result;
    for (std::size_t i = 0; i < r.targets.size(); ++i) {
        result.emplace(graph.participant(r.targets[i]), r.durations[i]);
    }
    return result;
}

std::map<ParticipantId, TimeInstant> foremost_arrivals(const TemporalHypergraph& graph,
                                                       const SuccessorDag& dag,
                                                       const ParticipantId& source,
                                                       TimeInstant from) {
    const std::uint32_t s = require_participant(graph, source);
    SweepScratch scratch;
    scratch.bind(dag);
    ++scratch.source_epoch;
    sweep_durations(dag, s, from.seconds, scratch, false);
    std::map<ParticipantId, TimeInstant> result;
    std::sort(scratch.touched.begin(), scratch.touched.end());
    for (std::uint32_t v : scratch.touched) {
        result.emplace(graph.participant(v), TimeInstant{scratch.tgt_arr[v]});
    }
    return result;
}

std::set<ParticipantId> horizon(const TemporalHypergraph& graph, const SuccessorDag& dag,
                                const ParticipantId& source) {
    std::set<ParticipantId> result;
    for (const auto& [target, hops] : shortest_distances(graph, dag, source)) {
        result.insert(target);
    }
    return result;
}

std::vector<std::pair<TimeInstant, std::size_t>> horizon_growth(
    const TemporalHypergraph& graph, const SuccessorDag& dag, const ParticipantId& source,
    const std::vector<TimeInstant>& grid) {
    if (grid.empty()) {
        throw EmptyGrid("horizon_growth needs a non-empty grid");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && grid[i] < grid[i - 1]) {
            throw std::invalid_argument("horizon_growth grid must be ascending");
        }
        if (!graph.window().contains(grid[i])) {
            throw std::invalid_argument("horizon_growth grid point outside the window");
        }
    }

    auto arrivals = foremost_arrivals(graph, dag, source, graph.window().start);
    std::vector<std::int64_t> times;
    times.reserve(arrivals.size());
    for (const auto& [target, at] : arrivals) {
        times.push_back(at.seconds);
    }
    std::sort(times.begin(), times.end());

    std::vector<std::pair<TimeInstant, std::size_t>> result;
    result.reserve(grid.size());
    for (TimeInstant t : grid) {
        const auto count =
            std::upper_bound(times.begin(), times.end(), t.seconds) - times.begin();
        result.emplace_back(t, static_cast<std::size_t>(count));
    }
    return result;
}

DistanceSummary source_summary(const TemporalHypergraph& graph, const SuccessorDag& dag,
                               const ParticipantId& source) {
    const std::uint32_t s = require_participant(graph, source);
    SweepScratch scratch;
    scratch.bind(dag);
    SourceResult r;
    compute_source(dag, s, scratch, r);
    return to_summary(graph, s, r);
}

void for_each_summary(const TemporalHypergraph& graph, const SuccessorDag& dag, unsigned workers,
                      const std::function<void(DistanceSummary&&)>& callback) {
    const std::uint32_t n = static_cast<std::uint32_t>(graph.participant_count());
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }

    if (workers == 1 || n <= 1) {
        SweepScratch scratch;
        scratch.bind(dag);
        SourceResult r;
        for (std::uint32_t i = 0; i < n; ++i) {
            compute_source(dag, i, scratch, r);
            callback(to_summary(graph, i, r));
        }
        return;
    }

    // Workers compute sources out of order; the caller thread emits them in
    // index order. max_pending bounds the reorder buffer.
    std::mutex mu;
    std::condition_variable produced;
    std::condition_variable space;
    std::map<std::uint32_t, DistanceSummary> pending;
    std::atomic<std::uint32_t> next_fetch{0};
    std::uint32_t next_emit = 0;
    const std::uint32_t max_pending = workers * 8;

    auto work = [&]() {
        SweepScratch scratch;
        scratch.bind(dag);
        SourceResult r;
        for (;;) {
            const std::uint32_t i = next_fetch.fetch_add(1);
            if (i >= n) break;
            compute_source(dag, i, scratch, r);
            DistanceSummary summary = to_summary(graph, i, r);
            std::unique_lock lock(mu);
            space.wait(lock, [&] { return i < next_emit + max_pending; });
            pending.emplace(i, std::move(summary));
            if (i == next_emit) {
                produced.notify_all();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }

    while (next_emit < n) {
        DistanceSummary summary;
        {
            std::unique_lock lock(mu);
            produced.wait(lock, [&] { return pending.count(next_emit) > 0; });
            auto node = pending.extract(next_emit);
            summary = std::move(node.mapped());
            ++next_emit;
            space.notify_all();
            produced.notify_all();
        }
        callback(std::move(summary));
    }
    for (auto& t : pool) {
        t.join();
    }
}

std::vector<DistanceSummary> all_sources_summary(const TemporalHypergraph& graph,
                                                 const SuccessorDag& dag, unsigned workers) {
    std::vector<DistanceSummary> result;
    result.reserve(graph.participant_count());
    for_each_summary(graph, dag, workers,
                     [&](DistanceSummary&& s) { result.push_back(std::move(s)); });
    return result;
}

std::optional<Journey> shortest_witness(const TemporalHypergraph& graph, const SuccessorDag& dag,
                                        const ParticipantId& source, const ParticipantId& target) {
    const std::uint32_t src = require_participant(graph, source);
    const std::uint32_t tgt = require_participant(graph, target);
    if (src == tgt) {
        return std::nullopt;
    }

    const std::size_t m = dag.channel_count();
    constexpr std::int32_t kFar = std::numeric_limits<std::int32_t>::max() / 2;

    // remaining[c]: fewest additional channels after c needed to reach the
    // target (0 when the target is a member of c). Computed backwards over
    // channels in descending close order; equal closes are folded as one
    // group so ties never chain.
    std::vector<std::uint32_t> order(m);
    for (std::uint32_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return dag.close_of(a) > dag.close_of(b);
    });

    std::vector<std::int32_t> remaining(m, kFar);
    std::vector<std::int32_t> suffix_min(graph.participant_count(), kFar);
    std::size_t i = 0;
    while (i < m) {
        std::size_t j = i;
        while (j < m && dag.close_of(order[j]) == dag.close_of(order[i])) ++j;
        for (std::size_t k = i; k < j; ++k) {
            const std::uint32_t c = order[k];
            std::int32_t best = kFar;
            for (std::uint32_t member : dag.channel_members(c)) {
                if (member == tgt) {
                    best = 0;
                    break;
                }
                best = std::min(best, suffix_min[member] == kFar
                                          ? kFar
                                          : suffix_min[member] + 1);
            }
            remaining[c] = best;
        }
        for (std::size_t k = i; k < j; ++k) {
            const std::uint32_t c = order[k];
            for (std::uint32_t member : dag.channel_members(c)) {
                suffix_min[member] = std::min(suffix_min[member], remaining[c]);
            }
        }
        i = j;
    }

    // Greedy forward pass: at each step take the candidate with the smallest
    // channel id; a completion always exists by construction of remaining[].
    const auto pick_smallest = [&](std::uint32_t candidate,
                                   std::optional<std::uint32_t>& best) {
        if (!best || graph.channel(candidate).id < graph.channel(*best).id) {
            best = candidate;
        }
    };

    std::int32_t want = kFar;
    std::optional<std::uint32_t> current;
    for (std::uint32_t c : dag.participant_channels(src)) {
        if (remaining[c] < want) {
            want = remaining[c];
            current = c;
        } else if (remaining[c] == want && want < kFar) {
            pick_smallest(c, current);
        }
    }
    if (!current || want >= kFar) {
        return std::nullopt;
    }

    Journey journey;
    journey.hops.push_back(graph.channel(*current).id);
    journey.departure = graph.channel(*current).closed;
    while (remaining[*current] > 0) {
        const std::int32_t next_want = remaining[*current] - 1;
        const std::int64_t close = dag.close_of(*current);
        std::optional<std::uint32_t> next;
        for (std::uint32_t member : dag.channel_members(*current)) {
            const auto closes = dag.participant_closes(member);
            const auto channels = dag.participant_channels(member);
            auto it = std::upper_bound(closes.begin(), closes.end(), close);
            for (; it != closes.end(); ++it) {
                const std::uint32_t c = channels[it - closes.begin()];
                if (remaining[c] == next_want) {
                    pick_smallest(c, next);
                }
            }
        }
        assert(next.has_value());
        journey.hops.push_back(graph.channel(*next).id);
        current = next;
    }
    journey.arrival = graph.channel(*current).closed;
    return journey;
}

}  // namespace crnet
