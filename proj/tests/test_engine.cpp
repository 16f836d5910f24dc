#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "crnet/engine.hpp"
#include "crnet/errors.hpp"
#include "crnet/fixtures.hpp"
#include "crnet/oracle.hpp"
#include "testutil.hpp"

using namespace crnet;
using testutil::channel;
using testutil::window;

namespace {

std::uint32_t channel_index(const TemporalHypergraph& graph, const std::string& id) {
    for (std::uint32_t i = 0; i < graph.channel_count(); ++i) {
        if (graph.channel(i).id == id) return i;
    }
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("successor dag has exactly the example arcs") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);
    const auto e1 = channel_index(graph, "e1");
    const auto e2 = channel_index(graph, "e2");
    const auto e3 = channel_index(graph, "e3");
    const auto e4 = channel_index(graph, "e4");

    CHECK(dag.has_arc(e1, e2));  // share v2
    CHECK(dag.has_arc(e1, e3));  // share v3
    CHECK(dag.has_arc(e2, e4));  // share v4
    CHECK(dag.has_arc(e4, e3));  // share v5, v6
    CHECK_FALSE(dag.has_arc(e2, e3));  // no shared participant
    CHECK_FALSE(dag.has_arc(e1, e4));
    CHECK_FALSE(dag.has_arc(e3, e1));  // arcs only go forward in time
    CHECK(dag.arc_count() == 4);
    CHECK(dag.successors_of(e1) == std::vector<std::uint32_t>{e2, e3});
}

TEST_CASE("disjoint channels produce no arcs") {
    const auto graph = build_graph(
        {channel("a", {"p", "q"}, 0, 10), channel("b", {"r", "s"}, 0, 20)}, window(0, 100));
    const auto dag = build_successor_dag(graph);
    CHECK(dag.arc_count() == 0);
}

TEST_CASE("equal close times never chain") {
    const auto graph = build_graph(
        {channel("a", {"p", "q"}, 0, 10), channel("b", {"q", "r"}, 0, 10)}, window(0, 100));
    const auto dag = build_successor_dag(graph);
    CHECK(dag.arc_count() == 0);
}

// Expected values below are frozen from the brute-force enumerator; each
// case also re-checks against a live oracle run.
TEST_CASE("shortest distances on the example network") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);

    const auto hops = shortest_distances(graph, dag, "v1");
    const std::map<ParticipantId, int> expected{
        {"v2", 1}, {"v3", 1}, {"v4", 2}, {"v5", 2}, {"v6", 2}};
    CHECK(hops == expected);

    const auto truth = oracle::enumerate_journeys(graph, "v1", 4);
    for (const auto& [target, hop] : hops) {
        CHECK(truth.distances.at(target).min_hops == hop);
    }
    CHECK(truth.distances.size() == hops.size());
}

TEST_CASE("shortest distances, single channel") {
    const auto graph = build_graph({channel("c", {"u", "v"}, 0, 10)}, window(0, 100));
    const auto dag = build_successor_dag(graph);
    const auto hops = shortest_distances(graph, dag, "u");
    CHECK(hops == std::map<ParticipantId, int>{{"v", 1}});
}

TEST_CASE("isolated participant reaches nobody") {
    const auto graph = build_graph(
        {channel("solo", {"u"}, 0, 10), channel("c", {"a", "b"}, 0, 20)}, window(0, 100));
    const auto dag = build_successor_dag(graph);
    CHECK(shortest_distances(graph, dag, "u").empty());
    CHECK(fastest_distances(graph, dag, "u").empty());
    CHECK(horizon(graph, dag, "u").empty());
}

TEST_CASE("engine operations reject unknown participants") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);
    CHECK_THROWS_AS(shortest_distances(graph, dag, "vX"), UnknownParticipant);
    CHECK_THROWS_AS(fastest_distances(graph, dag, "vX"), UnknownParticipant);
    CHECK_THROWS_AS(foremost_arrivals(graph, dag, "vX", TimeInstant{0}), UnknownParticipant);
    CHECK_THROWS_AS(horizon(graph, dag, "vX"), UnknownParticipant);
    CHECK_THROWS_AS(horizon_growth(graph, dag, "vX", {TimeInstant{1}}), UnknownParticipant);
}

TEST_CASE("fastest distances on the example network") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);

    const auto durations = fastest_distances(graph, dag, "v1");
    const std::map<ParticipantId, Duration> expected{
        {"v2", 0}, {"v3", 0}, {"v4", 1}, {"v5", 2}, {"v6", 2}};
    CHECK(durations == expected);

    SUBCASE("co-members cost nothing") {
        for (const auto& target : {"v2", "v3"}) {
            CHECK(durations.at(target) == 0);
        }
    }
    SUBCASE("unreachable targets are absent") {
        const auto from_v5 = fastest_distances(graph, dag, "v5");
        CHECK(from_v5.count("v1") == 0);
        CHECK(from_v5.count("v2") == 0);
    }
}

TEST_CASE("foremost arrivals on the example network") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);

    const auto arrivals = foremost_arrivals(graph, dag, "v1", TimeInstant{0});
    const std::map<ParticipantId, TimeInstant> expected{{"v2", TimeInstant{1}},
                                                        {"v3", TimeInstant{1}},
                                                        {"v4", TimeInstant{2}},
                                                        {"v5", TimeInstant{3}},
                                                        {"v6", TimeInstant{3}}};
    CHECK(arrivals == expected);

    SUBCASE("from later than every close") {
        CHECK(foremost_arrivals(graph, dag, "v1", TimeInstant{50}).empty());
    }
    SUBCASE("a channel closing exactly at from still departs") {
        const auto at_close = foremost_arrivals(graph, dag, "v1", TimeInstant{1});
        CHECK(at_close.at("v2") == TimeInstant{1});
    }
}

TEST_CASE("horizon matches the example orderings") {
    SUBCASE("e1 < e2 < e4 < e3 reaches everyone") {
        const auto graph = fixtures::example_network(1, 2, 4, 3);
        const auto dag = build_successor_dag(graph);
        CHECK(horizon(graph, dag, "v1") ==
              std::set<ParticipantId>{"v2", "v3", "v4", "v5", "v6"});
    }
    SUBCASE("e1 > e2 >= e3 stops after the first hop") {
        const auto graph = fixtures::example_network(3, 2, 2, 2);
        const auto dag = build_successor_dag(graph);
        CHECK(horizon(graph, dag, "v1") == std::set<ParticipantId>{"v2", "v3"});
    }
}

TEST_CASE("horizon growth counts foremost arrivals") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);

    const std::vector<TimeInstant> grid{TimeInstant{1}, TimeInstant{2}, TimeInstant{3},
                                        TimeInstant{4}};
    const auto growth = horizon_growth(graph, dag, "v1", grid);
    const std::vector<std::pair<TimeInstant, std::size_t>> expected{
        {TimeInstant{1}, 2}, {TimeInstant{2}, 3}, {TimeInstant{3}, 5}, {TimeInstant{4}, 5}};
    CHECK(growth == expected);

    SUBCASE("grid before the first close is all zeros") {
        const auto early = horizon_growth(graph, dag, "v1", {TimeInstant{0}});
        CHECK(early == std::vector<std::pair<TimeInstant, std::size_t>>{{TimeInstant{0}, 0}});
    }
    SUBCASE("final grid point at window end equals the horizon size") {
        const auto full = horizon_growth(graph, dag, "v1", {graph.window().end});
        CHECK(full.back().second == horizon(graph, dag, "v1").size());
    }
    SUBCASE("empty grid is an error") {
        CHECK_THROWS_AS(horizon_growth(graph, dag, "v1", {}), EmptyGrid);
    }
}

TEST_CASE("all-sources summaries compose the three distances") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);
    const auto summaries = all_sources_summary(graph, dag, 1);
    REQUIRE(summaries.size() == 6);
    CHECK(summaries.front().source == "v1");

    const auto& v1 = summaries.front();
    CHECK(v1.horizon_size() == 5);
    const auto* v5 = v1.find("v5");
    REQUIRE(v5 != nullptr);
    CHECK(v5->min_hops == 2);
    CHECK(v5->min_duration == 2);
    CHECK(v5->earliest_arrival == TimeInstant{3});

    // horizon sizes frozen from the oracle: v1..v6
    std::vector<std::size_t> sizes;
    for (const auto& summary : summaries) sizes.push_back(summary.horizon_size());
    CHECK(sizes == std::vector<std::size_t>{5, 5, 5, 4, 3, 3});
}

TEST_CASE("one channel with n participants") {
    const auto graph =
        build_graph({channel("c", {"a", "b", "c", "d", "e"}, 0, 10)}, window(0, 100));
    const auto dag = build_successor_dag(graph);
    for (const auto& summary : all_sources_summary(graph, dag, 1)) {
        CHECK(summary.horizon_size() == 4);
        for (const auto& target : summary.targets) {
            CHECK(target.min_hops == 1);
            CHECK(target.min_duration == 0);
            CHECK(target.earliest_arrival == TimeInstant{10});
        }
    }
}

TEST_CASE("a broker bridges two temporally interleaved cliques") {
    // clique A talks early, clique B later; only the broker sits in both
    const auto graph = build_graph(
        {
            channel("a1", {"broker", "a1p", "a2p"}, 0, 10),
            channel("a2", {"a1p", "a3p"}, 0, 20),
            channel("b1", {"broker", "b1p"}, 0, 30),
            channel("b2", {"b1p", "b2p"}, 0, 40),
        },
        window(0, 100));
    const auto dag = build_successor_dag(graph);

    const auto reach = horizon(graph, dag, "broker");
    const auto truth = oracle::enumerate_journeys(graph, "broker", 4);
    std::set<ParticipantId> expected;
    for (const auto& [target, d] : truth.distances) expected.insert(target);
    CHECK(reach == expected);
    CHECK(reach == std::set<ParticipantId>{"a1p", "a2p", "a3p", "b1p", "b2p"});
}

TEST_CASE("summaries are identical for any worker count") {
    const auto graph = fixtures::random_network(99, 12, 15);
    const auto dag = build_successor_dag(graph);
    const auto one = all_sources_summary(graph, dag, 1);
    const auto four = all_sources_summary(graph, dag, 4);
    const auto eight = all_sources_summary(graph, dag, 8);
    CHECK(one == four);
    CHECK(one == eight);
}

TEST_CASE("engine equals the oracle on random instances") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto graph = fixtures::random_network(seed);
        const auto mismatch = fixtures::compare_engine_to_oracle(graph);
        if (mismatch) {
            CAPTURE(seed);
            FAIL_CHECK(*mismatch);
        }
    }
}

TEST_CASE("property: shortest and fastest reach the same targets") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto graph = fixtures::random_network(seed);
        const auto dag = build_successor_dag(graph);
        for (const auto& source : graph.participants()) {
            const auto hops = shortest_distances(graph, dag, source);
            const auto durations = fastest_distances(graph, dag, source);
            REQUIRE(hops.size() == durations.size());
            for (const auto& [target, h] : hops) {
                CHECK(durations.count(target) == 1);
            }
        }
    }
}

TEST_CASE("property: growth is monotone and ends at the horizon size") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        const auto graph = fixtures::random_network(seed);
        const auto dag = build_successor_dag(graph);
        std::vector<TimeInstant> grid;
        for (std::int64_t t = 0; t <= 300; t += 30) grid.push_back(TimeInstant{t});
        for (const auto& source : graph.participants()) {
            const auto growth = horizon_growth(graph, dag, source, grid);
            for (std::size_t i = 1; i < growth.size(); ++i) {
                CHECK(growth[i].second >= growth[i - 1].second);
            }
            CHECK(growth.back().second == horizon(graph, dag, source).size());
        }
    }
}

TEST_CASE("property: hop and duration bounds") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        const auto graph = fixtures::random_network(seed);
        const auto dag = build_successor_dag(graph);
        for (const auto& summary : all_sources_summary(graph, dag, 1)) {
            for (const auto& target : summary.targets) {
                CHECK(target.min_hops >= 1);
                CHECK(target.min_hops <= static_cast<int>(graph.channel_count()));
                CHECK(target.min_duration >= 0);
                CHECK(target.min_duration <= graph.window().length());
            }
        }
    }
}

TEST_CASE("property: time shift leaves hops and durations alone") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        const auto graph = fixtures::random_network(seed);
        const Duration offset = 1000 + static_cast<Duration>(seed);

        std::vector<Channel> shifted = graph.channels();
        for (auto& c : shifted) {
            c.opened = c.opened + offset;
            c.closed = c.closed + offset;
        }
        const ObservationWindow shifted_window{graph.window().start + offset,
                                               graph.window().end + offset};
        const auto moved = build_graph(shifted, shifted_window);

        const auto dag = build_successor_dag(graph);
        const auto moved_dag = build_successor_dag(moved);
        for (const auto& source : graph.participants()) {
            const auto base = source_summary(graph, dag, source);
            const auto after = source_summary(moved, moved_dag, source);
            REQUIRE(base.targets.size() == after.targets.size());
            for (std::size_t i = 0; i < base.targets.size(); ++i) {
                CHECK(base.targets[i].target == after.targets[i].target);
                CHECK(base.targets[i].min_hops == after.targets[i].min_hops);
                CHECK(base.targets[i].min_duration == after.targets[i].min_duration);
                CHECK(base.targets[i].earliest_arrival + offset ==
                      after.targets[i].earliest_arrival);
            }
        }
    }
}

TEST_CASE("property: collapsing a chained pair removes journeys through it") {
    std::mt19937_64 rng(77);
    int collapsed_cases = 0;
    for (std::uint64_t seed = 500; seed < 560; ++seed) {
        const auto graph = fixtures::random_network(seed);
        const auto dag = build_successor_dag(graph);

        // find a chained pair e -> e' with strictly increasing closes
        std::optional<std::pair<std::uint32_t, std::uint32_t>> pair;
        for (std::uint32_t c = 0; c < graph.channel_count() && !pair; ++c) {
            const auto succ = dag.successors_of(c);
            if (!succ.empty()) {
                pair = {c, succ[rng() % succ.size()]};
            }
        }
        if (!pair) continue;
        ++collapsed_cases;
        const auto [from, to] = *pair;
        const std::string from_id = graph.channel(from).id;
        const std::string to_id = graph.channel(to).id;

        std::vector<Channel> collapsed = graph.channels();
        for (auto& c : collapsed) {
            if (c.id == from_id) {
                c.closed = graph.channel(to).closed;  // tie the pair
                c.opened = std::min(c.opened, c.closed);
            }
        }
        const auto tied = build_graph(collapsed, graph.window());
        const auto tied_dag = build_successor_dag(tied);

        std::uint32_t tied_from = 0, tied_to = 0;
        for (std::uint32_t c = 0; c < tied.channel_count(); ++c) {
            if (tied.channel(c).id == from_id) tied_from = c;
            if (tied.channel(c).id == to_id) tied_to = c;
        }
        CHECK_FALSE(tied_dag.has_arc(tied_from, tied_to));

        // the oracle sees no journey using the collapsed chain either
        for (const auto& source : tied.participants()) {
            const auto truth = oracle::enumerate_journeys(tied, source,
                                                          static_cast<int>(tied.channel_count()));
            for (const auto& journey : truth.journey_ids(tied)) {
                for (std::size_t i = 0; i + 1 < journey.size(); ++i) {
                    CHECK_FALSE((journey[i] == from_id && journey[i + 1] == to_id));
                }
            }
        }
        // and the engine still agrees with the oracle on the tied graph
        const auto mismatch = fixtures::compare_engine_to_oracle(tied);
        if (mismatch) {
            CAPTURE(seed);
            FAIL_CHECK(*mismatch);
        }
    }
    CHECK(collapsed_cases > 10);
}

TEST_CASE("witness journeys are minimal and lexicographically smallest") {
    const auto graph = fixtures::example_network(1, 2, 4, 3);
    const auto dag = build_successor_dag(graph);

    const auto to_v5 = shortest_witness(graph, dag, "v1", "v5");
    REQUIRE(to_v5.has_value());
    CHECK(to_v5->hops == std::vector<std::string>{"e1", "e3"});
    CHECK(to_v5->departure == TimeInstant{1});
    CHECK(to_v5->arrival == TimeInstant{4});
    CHECK(to_v5->duration() == 3);

    const auto to_v4 = shortest_witness(graph, dag, "v1", "v4");
    REQUIRE(to_v4.has_value());
    CHECK(to_v4->hops == std::vector<std::string>{"e1", "e2"});

    SUBCASE("ties between parallel channels pick the smaller id") {
        const auto parallel = build_graph(
            {channel("w2", {"u", "v"}, 0, 10), channel("w1", {"u", "v"}, 0, 10)},
            window(0, 100));
        const auto pdag = build_successor_dag(parallel);
        const auto journey = shortest_witness(parallel, pdag, "u", "v");
        REQUIRE(journey.has_value());
        CHECK(journey->hops == std::vector<std::string>{"w1"});
    }
    SUBCASE("unreachable pairs have no witness") {
        CHECK_FALSE(shortest_witness(graph, dag, "v5", "v1").has_value());
        CHECK_FALSE(shortest_witness(graph, dag, "v1", "v1").has_value());
    }
    SUBCASE("witness hop counts match shortest distances everywhere") {
        for (std::uint64_t seed = 600; seed < 615; ++seed) {
            const auto g = fixtures::random_network(seed);
            const auto d = build_successor_dag(g);
            for (const auto& source : g.participants()) {
                for (const auto& [target, hops] : shortest_distances(g, d, source)) {
                    const auto journey = shortest_witness(g, d, source, target);
                    REQUIRE(journey.has_value());
                    CHECK(journey->hop_count() == static_cast<std::size_t>(hops));
                }
            }
        }
    }
}
