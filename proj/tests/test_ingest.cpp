#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "crnet/engine.hpp"
#include "crnet/errors.hpp"
#include "crnet/hash.hpp"
#include "crnet/ingest.hpp"
#include "testutil.hpp"

using namespace crnet;

namespace {

ParsedEvents parse_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_events(in, EventFormat::Csv);
}

ParsedEvents parse_jsonl(const std::string& text) {
    std::istringstream in(text);
    return parse_events(in, EventFormat::JsonLines);
}

EventRecord event(const std::string& channel, const std::string& participant, std::int64_t t,
                  EventKind kind = EventKind::Comment) {
    return {channel, participant, TimeInstant{t}, kind};
}

}  // namespace

TEST_CASE("CSV rows map directly onto event records") {
    const auto parsed = parse_csv(
        "channel_id,participant_id,timestamp,kind\n"
        "42,alice,1580725800,comment\n"
        "42,bob,1580725900,approve\n");
    REQUIRE(parsed.issues.empty());
    REQUIRE(parsed.events.size() == 2);
    CHECK(parsed.events[0].channel_id == "42");
    CHECK(parsed.events[0].participant_id == "alice");
    CHECK(parsed.events[0].timestamp == TimeInstant{1580725800});
    CHECK(parsed.events[0].kind == EventKind::Comment);
    CHECK(parsed.events[1].kind == EventKind::Approve);
}

TEST_CASE("reactions are not interactions") {
    const auto parsed = parse_csv(
        "channel_id,participant_id,timestamp,kind\n"
        "42,alice,1580725800,emoji\n");
    CHECK(parsed.events.empty());
    REQUIRE(parsed.issues.size() == 1);
    CHECK(parsed.issues[0].line == 2);
    CHECK(parsed.issues[0].unknown_kind);

    std::istringstream in(
        "channel_id,participant_id,timestamp,kind\n"
        "42,alice,1580725800,emoji\n");
    CHECK_THROWS_AS(parse_events_strict(in, EventFormat::Csv), UnknownKind);
}

TEST_CASE("an empty file is an empty stream") {
    const auto parsed = parse_csv("");
    CHECK(parsed.events.empty());
    CHECK(parsed.issues.empty());
    CHECK(parsed.lines_read == 0);
}

TEST_CASE("CSV header may reorder columns but must be complete") {
    const auto parsed = parse_csv(
        "kind,timestamp,participant_id,channel_id\n"
        "close,1580725800,alice,42\n");
    REQUIRE(parsed.events.size() == 1);
    CHECK(parsed.events[0].channel_id == "42");
    CHECK(parsed.events[0].kind == EventKind::Close);

    std::istringstream missing("channel_id,participant_id,timestamp\n");
    CHECK_THROWS_AS(parse_events(missing, EventFormat::Csv), ParseError);
}

TEST_CASE("malformed rows carry their line numbers") {
    const auto parsed = parse_csv(
        "channel_id,participant_id,timestamp,kind\n"
        "42,alice,1580725800,comment\n"
        "43,bob\n"
        "44,carol,not-a-time,comment\n"
        "45,dave,1580725900,create\n");
    CHECK(parsed.events.size() == 2);
    REQUIRE(parsed.issues.size() == 2);
    CHECK(parsed.issues[0].line == 3);
    CHECK(parsed.issues[1].line == 4);
}

TEST_CASE("RFC-3339 timestamps parse to UTC seconds") {
    CHECK(parse_rfc3339("2020-02-03T10:00:00Z") == TimeInstant{1580724000});
    CHECK(parse_rfc3339("2020-02-03t10:00:00z") == TimeInstant{1580724000});
    CHECK(parse_rfc3339("2020-02-03T10:00:00+01:00") == TimeInstant{1580720400});
    CHECK(parse_rfc3339("2020-02-03T10:00:00-02:30") == TimeInstant{1580733000});
    CHECK(parse_rfc3339("2020-02-03T10:00:00.987Z") == TimeInstant{1580724000});
    CHECK_FALSE(parse_rfc3339("2020-02-03").has_value());
    CHECK_FALSE(parse_rfc3339("2020-13-03T10:00:00Z").has_value());
    CHECK_FALSE(parse_rfc3339("2020-02-03T10:00:00").has_value());
}

TEST_CASE("timestamp style is detected once and enforced per file") {
    const auto rfc = parse_csv(
        "channel_id,participant_id,timestamp,kind\n"
        "1,alice,2020-02-03T10:00:00Z,comment\n"
        "1,bob,2020-02-03T11:00:00Z,comment\n");
    REQUIRE(rfc.issues.empty());
    CHECK(rfc.events[0].timestamp == TimeInstant{1580724000});

    const auto mixed = parse_csv(
        "channel_id,participant_id,timestamp,kind\n"
        "1,alice,1580724000,comment\n"
        "1,bob,2020-02-03T11:00:00Z,comment\n");
    CHECK(mixed.events.size() == 1);
    REQUIRE(mixed.issues.size() == 1);
    CHECK(mixed.issues[0].line == 3);
}

TEST_CASE("JSON-lines events parse with both timestamp styles") {
    const auto parsed = parse_jsonl(
        R"({"channel_id":"7","participant_id":"alice","timestamp":1580724000,"kind":"create"})"
        "\n"
        R"({"channel_id":"7","participant_id":"bob","timestamp":"2020-02-03T11:00:00Z","kind":"comment"})"
        "\n"
        "not json\n");
    CHECK(parsed.events.size() == 2);
    CHECK(parsed.events[0].kind == EventKind::Create);
    CHECK(parsed.events[1].timestamp == TimeInstant{1580727600});
    REQUIRE(parsed.issues.size() == 1);
    CHECK(parsed.issues[0].line == 3);
}

TEST_CASE("slice_window matches the published timeframes") {
    const auto microsoft = slice_window("2020-02-03", 4);
    CHECK(microsoft.start == TimeInstant{1580688000});
    CHECK(microsoft.end == TimeInstant{1583107200});
    CHECK(microsoft.length() == 28 * kSecondsPerDay);

    // labelled 2019-11-04 to 2019-12-01 (inclusive Sunday) in the source
    const auto trivago = slice_window("2019-11-04", 4);
    CHECK(trivago.start == TimeInstant{1572825600});
    CHECK(trivago.end == TimeInstant{1575244800});

    CHECK_THROWS_AS(slice_window("2020-02-04", 4), NotAMonday);
    CHECK_THROWS_AS(slice_window("2020-02-30", 4), NotAMonday);
    CHECK_THROWS_AS(slice_window("nonsense", 4), NotAMonday);
    CHECK_THROWS_AS(slice_window("2020-02-03", 0), std::invalid_argument);
}

TEST_CASE("channels aggregate events by min and max timestamp") {
    IngestConfig config;
    config.window = testutil::window(0, 1000);
    config.anonymize = false;

    const auto result = assemble_channels(
        {event("7", "alice", 10), event("7", "bob", 20), event("7", "alice", 30)}, config);
    REQUIRE(result.graph.channel_count() == 1);
    const auto& c = result.graph.channel(0);
    CHECK(c.id == "7");
    CHECK(c.opened == TimeInstant{10});
    CHECK(c.closed == TimeInstant{30});
    CHECK(c.participants == std::vector<ParticipantId>{"alice", "bob"});
    CHECK(result.report.events_kept == 3);
}

TEST_CASE("anonymization is salted, consistent and applied to the graph") {
    IngestConfig config;
    config.window = testutil::window(0, 1000);
    config.salt = "s1";

    const auto result = assemble_channels(
        {event("7", "alice", 10), event("8", "alice", 20), event("8", "bob", 30)}, config);
    const auto token = anonymize_id("alice", "s1");
    CHECK(token != "alice");
    CHECK(result.graph.participant_index(token).has_value());
    CHECK_FALSE(result.graph.participant_index("alice").has_value());
    // same raw id, same token in both channels
    CHECK(result.graph.channel(0).participants[0] == result.graph.channel(1).participants[0]);

    CHECK(anonymize_id("alice", "s1") != anonymize_id("alice", "s2"));
    CHECK(anonymize_id("alice", "s1") != anonymize_id("bob", "s1"));
}

TEST_CASE("missing salt fails before any work") {
    IngestConfig config;
    config.window = testutil::window(0, 1000);
    CHECK_THROWS_AS(assemble_channels({event("7", "alice", 10)}, config), SaltMissing);
}

TEST_CASE("bot-only channels vanish and are counted") {
    IngestConfig config;
    config.window = testutil::window(0, 1000);
    config.anonymize = false;
    config.bot_ids = {"ci-bot"};
    config.bot_patterns = {"*[bot]"};

    const auto result = assemble_channels(
        {event("1", "ci-bot", 10), event("1", "ci-bot", 20), event("2", "alice", 30),
         event("2", "renovate[bot]", 40), event("2", "bob", 50)},
        config);
    CHECK(result.report.dropped_by_bot == 3);
    CHECK(result.report.events_kept == 2);
    REQUIRE(result.graph.channel_count() == 1);
    CHECK(result.graph.channel(0).id == "2");
    CHECK(result.graph.channel(0).participants == std::vector<ParticipantId>{"alice", "bob"});
}

TEST_CASE("kind filtering is counted separately") {
    IngestConfig config;
    config.window = testutil::window(0, 1000);
    config.anonymize = false;
    config.include_kinds = {EventKind::Comment};

    const auto result = assemble_channels(
        {event("1", "alice", 10, EventKind::Comment), event("1", "bob", 20, EventKind::Approve)},
        config);
    CHECK(result.report.dropped_by_kind == 1);
    CHECK(result.graph.channel(0).participants == std::vector<ParticipantId>{"alice"});
}

TEST_CASE("window crossing shows up in the bound histogram and the clamp") {
    IngestConfig config;
    config.window = testutil::window(100 * kSecondsPerDay, 128 * kSecondsPerDay);
    config.anonymize = false;

    const auto result = assemble_channels(
        {event("x", "alice", 99 * kSecondsPerDay), event("x", "bob", 101 * kSecondsPerDay)},
        config);
    CHECK(result.report.bound_histogram.at(BoundClass::RightBounded) == 1);
    CHECK(result.graph.channel(0).opened == TimeInstant{100 * kSecondsPerDay});  // clamped
    CHECK(result.channels[0].opened == TimeInstant{99 * kSecondsPerDay});        // raw copy
}

TEST_CASE("events of channels outside the window are dropped and counted") {
    IngestConfig config;
    config.window = testutil::window(1000, 2000);
    config.anonymize = false;

    const auto result = assemble_channels(
        {event("old", "alice", 10), event("old", "bob", 20), event("in", "carol", 1500)},
        config);
    CHECK(result.report.dropped_by_window == 2);
    CHECK(result.report.events_kept == 1);
    CHECK(result.report.channels_built == 1);

    CHECK_THROWS_AS(
        assemble_channels({event("old", "alice", 10)}, config), EmptyGraph);
}

TEST_CASE("report arithmetic reconciles on random inputs") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 50; ++round) {
        IngestConfig config;
        config.window = testutil::window(100, 900);
        config.anonymize = false;
        config.bot_ids = {"bot-1"};
        if (round % 2) config.include_kinds = {EventKind::Comment, EventKind::Create};

        std::vector<EventRecord> events;
        const std::size_t n = 1 + rng() % 60;
        for (std::size_t i = 0; i < n; ++i) {
            const auto kinds = all_event_kinds();
            auto it = kinds.begin();
            std::advance(it, rng() % kinds.size());
            events.push_back(event("c" + std::to_string(rng() % 8),
                                   rng() % 5 ? "p" + std::to_string(rng() % 6) : "bot-1",
                                   static_cast<std::int64_t>(rng() % 1200), *it));
        }
        try {
            const auto result = assemble_channels(events, config);
            const auto& r = result.report;
            CHECK(r.events_read ==
                  r.events_kept + r.dropped_by_bot + r.dropped_by_kind + r.dropped_by_window);
            std::size_t histogram_total = 0;
            for (const auto& [cls, count] : r.bound_histogram) histogram_total += count;
            CHECK(histogram_total == r.channels_built);
        } catch (const EmptyGraph&) {
            // every channel can land outside the window; nothing to check then
        }
    }
}

TEST_CASE("changing the salt relabels participants but not metrics") {
    std::vector<EventRecord> events;
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        events.push_back(event("c" + std::to_string(rng() % 10),
                               "p" + std::to_string(rng() % 8),
                               static_cast<std::int64_t>(rng() % 900)));
    }
    IngestConfig config;
    config.window = testutil::window(0, 1000);

    config.salt = "salt-a";
    const auto a = assemble_channels(events, config);
    config.salt = "salt-b";
    const auto b = assemble_channels(events, config);

    CHECK(a.graph.participants() != b.graph.participants());

    auto horizon_multiset = [](const TemporalHypergraph& graph) {
        const auto dag = build_successor_dag(graph);
        std::vector<std::size_t> sizes;
        for (const auto& s : all_sources_summary(graph, dag, 1)) {
            sizes.push_back(s.horizon_size());
        }
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    CHECK(horizon_multiset(a.graph) == horizon_multiset(b.graph));
}

TEST_CASE("removing bots never enlarges anyone's horizon") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 20; ++round) {
        std::vector<EventRecord> events;
        const std::size_t n = 20 + rng() % 40;
        for (std::size_t i = 0; i < n; ++i) {
            const bool bot = rng() % 4 == 0;
            events.push_back(event("c" + std::to_string(rng() % 10),
                                   bot ? "bot-" + std::to_string(rng() % 2)
                                       : "p" + std::to_string(rng() % 8),
                                   static_cast<std::int64_t>(rng() % 900)));
        }
        IngestConfig keep;
        keep.window = testutil::window(0, 1000);
        keep.anonymize = false;
        IngestConfig drop = keep;
        drop.bot_patterns = {"bot-*"};

        const auto with_bots = assemble_channels(events, keep);
        IngestResult without_bots = [&] {
            try {
                return assemble_channels(events, drop);
            } catch (const EmptyGraph&) {
                return assemble_channels({event("c0", "p0", 1)}, drop);
            }
        }();

        const auto dag_with = build_successor_dag(with_bots.graph);
        const auto dag_without = build_successor_dag(without_bots.graph);
        for (const auto& p : without_bots.graph.participants()) {
            if (!with_bots.graph.participant_index(p)) continue;
            const auto before = horizon(with_bots.graph, dag_with, p).size();
            const auto after = horizon(without_bots.graph, dag_without, p).size();
            CHECK(after <= before);
        }
    }
}

TEST_CASE("bot files mix ids, globs and comments") {
    std::istringstream in(
        "# our CI accounts\n"
        "ci-bot\n"
        "  *[bot]   # suffix convention\n"
        "deploy-?\n"
        "\n");
    IngestConfig config;
    load_bot_file(in, config);
    CHECK(config.bot_ids == std::vector<std::string>{"ci-bot"});
    CHECK(config.bot_patterns == std::vector<std::string>{"*[bot]", "deploy-?"});
    CHECK(is_bot("ci-bot", config));
    CHECK(is_bot("renovate[bot]", config));
    CHECK(is_bot("deploy-7", config));
    CHECK_FALSE(is_bot("alice", config));
}

TEST_CASE("top contributors are ranked by distinct channels") {
    IngestConfig config;
    config.window = testutil::window(0, 1000);
    config.anonymize = false;

    const auto result = assemble_channels(
        {event("1", "alice", 10), event("2", "alice", 20), event("3", "alice", 30),
         event("1", "bob", 15), event("2", "bob", 25), event("3", "carol", 35)},
        config);
    REQUIRE(result.report.top_contributors.size() == 3);
    CHECK(result.report.top_contributors[0] ==
          std::pair<ParticipantId, std::size_t>{"alice", 3});
    CHECK(result.report.top_contributors[1] ==
          std::pair<ParticipantId, std::size_t>{"bob", 2});
}
