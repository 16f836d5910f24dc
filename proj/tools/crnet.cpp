// crnet — models code review as a time-varying multi-hypergraph and reports
// the upper bound of information diffusion: who can reach whom, in how few
// reviews, and how quickly.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crnet/engine.hpp"
#include "crnet/errors.hpp"
#include "crnet/events.hpp"
#include "crnet/fixtures.hpp"
#include "crnet/graph_io.hpp"
#include "crnet/hash.hpp"
#include "crnet/ingest.hpp"
#include "crnet/metrics.hpp"
#include "crnet/oracle.hpp"

namespace fs = std::filesystem;
using namespace crnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;    // parse errors, invalid graphs, empty graphs
constexpr int kExitConfig = 2;  // bad flags and option combinations
constexpr int kExitCollision = 3;

struct IngestOptions {
    std::string events_path;
    std::string format = "auto";
    std::string monday;
    int weeks = 4;
    std::string bots_path;
    std::string salt;
    bool no_anonymize = false;
    std::vector<std::string> kinds;
    std::string output;
    std::string report_path;
};

struct AnalyzeOptions {
    std::string graph_path;
    std::string out_dir;
    int grid_hours = 24;
    std::vector<double> percentiles = {5, 25, 50, 75, 95};
    unsigned workers = 0;
    bool witness = false;
};

struct ReportOptions {
    std::string graph_path;
    std::string format = "text";
    unsigned workers = 0;
};

struct SelfcheckOptions {
    int random_count = 25;
    std::string filter;
};

nlohmann::json report_to_json(const IngestReport& report) {
    nlohmann::json bounds;
    for (BoundClass cls : {BoundClass::Bounded, BoundClass::LeftBounded, BoundClass::RightBounded,
                           BoundClass::Unbounded}) {
        const auto it = report.bound_histogram.find(cls);
        bounds[to_string(cls)] = it == report.bound_histogram.end() ? 0 : it->second;
    }
    nlohmann::json top = nlohmann::json::array();
    for (const auto& [participant, channels] : report.top_contributors) {
        top.push_back({{"participant", participant}, {"channels", channels}});
    }
    return nlohmann::json{{"events_read", report.events_read},
                          {"events_kept", report.events_kept},
                          {"dropped_by_bot", report.dropped_by_bot},
                          {"dropped_by_kind", report.dropped_by_kind},
                          {"dropped_by_window", report.dropped_by_window},
                          {"channels_built", report.channels_built},
                          {"participants_kept", report.participants_kept},
                          {"bound_histogram", bounds},
                          {"top_contributors", top}};
}

void print_bound_histogram(std::ostream& out, const std::map<BoundClass, std::size_t>& histogram) {
    std::size_t total = 0;
    for (const auto& [cls, count] : histogram) total += count;
    out << "bound classes (pre-clamp):\n";
    for (BoundClass cls : {BoundClass::Bounded, BoundClass::LeftBounded, BoundClass::RightBounded,
                           BoundClass::Unbounded}) {
        const auto it = histogram.find(cls);
        const std::size_t count = it == histogram.end() ? 0 : it->second;
        const double share = total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / total;
        out << "  " << to_string(cls) << ": " << count << " (" << format_fixed(share, 1)
            << "%)\n";
    }
}

int run_ingest(const IngestOptions& opt) {
    IngestConfig config;
    try {
        config.window = slice_window(opt.monday, opt.weeks);
    } catch (const NotAMonday& e) {
        std::cerr << "crnet ingest: --monday: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "crnet ingest: " << e.what() << "\n";
        return kExitConfig;
    }
    config.anonymize = !opt.no_anonymize;
    config.salt = opt.salt;
    if (config.anonymize && config.salt.empty()) {
        std::cerr << "crnet ingest: --salt is required unless --no-anonymize is given\n";
        return kExitConfig;
    }
    if (!opt.kinds.empty()) {
        config.include_kinds.clear();
        for (const auto& name : opt.kinds) {
            const auto kind = parse_kind(name);
            if (!kind) {
                std::cerr << "crnet ingest: --include-kinds: unknown kind '" << name << "'\n";
                return kExitConfig;
            }
            config.include_kinds.insert(*kind);
        }
    }
    if (!opt.bots_path.empty()) {
        std::ifstream bots(opt.bots_path);
        if (!bots) {
            std::cerr << "crnet ingest: cannot open bots file '" << opt.bots_path << "'\n";
            return kExitConfig;
        }
        load_bot_file(bots, config);
    }

    const fs::path output = opt.output;
    const fs::path report_path =
        opt.report_path.empty() ? output.parent_path() / "report.json" : fs::path(opt.report_path);
    if (fs::weakly_canonical(output) == fs::weakly_canonical(fs::path(opt.events_path)) ||
        fs::weakly_canonical(report_path) == fs::weakly_canonical(fs::path(opt.events_path)) ||
        fs::weakly_canonical(output) == fs::weakly_canonical(report_path)) {
        std::cerr << "crnet ingest: input and output paths must be distinct\n";
        return kExitConfig;
    }

    std::ifstream in(opt.events_path);
    if (!in) {
        std::cerr << "crnet ingest: cannot open events file '" << opt.events_path << "'\n";
        return kExitConfig;
    }
    EventFormat format;
    if (opt.format == "csv") {
        format = EventFormat::Csv;
    } else if (opt.format == "jsonl") {
        format = EventFormat::JsonLines;
    } else {
        format = detect_format(opt.events_path);
    }

    try {
        const ParsedEvents parsed = parse_events(in, format);
        if (!parsed.issues.empty()) {
            for (const auto& issue : parsed.issues) {
                std::cerr << opt.events_path << ":" << issue.line << ": " << issue.reason << "\n";
            }
            std::cerr << "crnet ingest: " << parsed.issues.size() << " malformed row(s)\n";
            return kExitData;
        }
        const IngestResult result = assemble_channels(parsed.events, config);

        write_graph_file(output, GraphFile{config.window, result.channels});
        std::ofstream report_out(report_path);
        if (!report_out) {
            std::cerr << "crnet ingest: cannot write '" << report_path.string() << "'\n";
            return kExitConfig;
        }
        report_out << report_to_json(result.report).dump(2) << '\n';

        std::cout << "events: read " << result.report.events_read << ", kept "
                  << result.report.events_kept << ", bot " << result.report.dropped_by_bot
                  << ", kind " << result.report.dropped_by_kind << ", window "
                  << result.report.dropped_by_window << "\n";
        std::cout << "channels built: " << result.report.channels_built
                  << ", participants: " << result.report.participants_kept << "\n";
        print_bound_histogram(std::cout, result.report.bound_histogram);
        std::cout << "wrote " << output.string() << " and " << report_path.string() << "\n";
        return kExitOk;
    } catch (const SaltMissing& e) {
        std::cerr << "crnet ingest: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "crnet ingest: " << e.what() << "\n";
        return kExitData;
    }
}

// Grid instants: window.start + k*resolution for k = 1..N, landing exactly
// on window.end.
std::vector<TimeInstant> make_grid(const ObservationWindow& window, Duration resolution) {
    std::vector<TimeInstant> grid;
    for (TimeInstant t = window.start + resolution; t <= window.end; t = t + resolution) {
        grid.push_back(t);
    }
    return grid;
}

int run_analyze(const AnalyzeOptions& opt) {
    if (opt.grid_hours < 1) {
        std::cerr << "crnet analyze: --grid-hours must be >= 1\n";
        return kExitConfig;
    }
    std::vector<double> percentiles = opt.percentiles;
    for (double p : percentiles) {
        if (p <= 0 || p > 100) {
            std::cerr << "crnet analyze: --percentiles values must be in (0, 100]\n";
            return kExitConfig;
        }
    }

    const fs::path out_dir = opt.out_dir;
    const std::vector<std::string> names = {"horizons.csv",     "topological_ecdf.csv",
                                            "temporal_ecdf.csv", "percentiles.csv",
                                            "bounds.csv",        "growth_bands.csv",
                                            "run_manifest.json"};
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const auto input_canonical = fs::weakly_canonical(fs::path(opt.graph_path));
    for (const auto& name : names) {
        if (fs::weakly_canonical(out_dir / name) == input_canonical) {
            std::cerr << "crnet analyze: output '" << (out_dir / name).string()
                      << "' would overwrite the input graph\n";
            return kExitCollision;
        }
    }

    GraphFile file;
    try {
        file = read_graph_file(opt.graph_path);
    } catch (const Error& e) {
        std::cerr << "crnet analyze: " << e.what() << "\n";
        return kExitData;
    }

    const Duration resolution = static_cast<Duration>(opt.grid_hours) * 3600;
    if (file.window.length() % resolution != 0) {
        std::cerr << "crnet analyze: grid resolution must divide the window length ("
                  << file.window.length() << " s)\n";
        return kExitConfig;
    }

    try {
        std::map<BoundClass, std::size_t> bound_histogram;
        for (const auto& channel : file.channels) {
            if (intersects(channel, file.window)) {
                ++bound_histogram[classify_bound(channel, file.window)];
            }
        }

        const TemporalHypergraph graph = build_graph(file.channels, file.window);
        const SuccessorDag dag = build_successor_dag(graph);
        const auto grid = make_grid(graph.window(), resolution);
        const std::size_t n = graph.participant_count();

        std::vector<std::pair<ParticipantId, std::size_t>> horizon_sizes;
        horizon_sizes.reserve(n);
        std::vector<std::size_t> sizes;
        sizes.reserve(n);
        std::vector<double> hop_samples;
        std::vector<double> duration_samples;
        std::vector<std::vector<std::size_t>> curves;
        curves.reserve(n);
        std::ofstream witness_out;
        if (opt.witness) {
            witness_out.open(out_dir / "witnesses.csv");
            witness_out << "source,target,min_hops,channels\n";
        }

        for_each_summary(graph, dag, opt.workers, [&](DistanceSummary&& summary) {
            horizon_sizes.emplace_back(summary.source, summary.horizon_size());
            sizes.push_back(summary.horizon_size());

            std::vector<std::int64_t> arrivals;
            arrivals.reserve(summary.targets.size());
            for (const auto& target : summary.targets) {
                hop_samples.push_back(static_cast<double>(target.min_hops));
                duration_samples.push_back(static_cast<double>(target.min_duration));
                arrivals.push_back(target.earliest_arrival.seconds);
            }
            std::sort(arrivals.begin(), arrivals.end());
            std::vector<std::size_t> curve;
            curve.reserve(grid.size());
            for (TimeInstant t : grid) {
                curve.push_back(static_cast<std::size_t>(
                    std::upper_bound(arrivals.begin(), arrivals.end(), t.seconds) -
                    arrivals.begin()));
            }
            curves.push_back(std::move(curve));

            if (opt.witness) {
                for (const auto& target : summary.targets) {
                    const auto journey =
                        shortest_witness(graph, dag, summary.source, target.target);
                    witness_out << summary.source << ',' << target.target << ','
                                << target.min_hops << ',';
                    if (journey) {
                        for (std::size_t i = 0; i < journey->hops.size(); ++i) {
                            if (i) witness_out << '|';
                            witness_out << journey->hops[i];
                        }
                    }
                    witness_out << '\n';
                }
            }
        });

        {
            std::ofstream out(out_dir / "horizons.csv");
            write_horizons_csv(out, horizon_sizes, n);
        }

        const Ecdf normalized = normalized_ranges_from_sizes(sizes, n);
        std::vector<double> absolute_samples;
        absolute_samples.reserve(sizes.size());
        for (std::size_t s : sizes) absolute_samples.push_back(static_cast<double>(s));
        const Ecdf absolute = Ecdf::from_samples(std::move(absolute_samples));

        std::vector<std::tuple<std::string, PercentileTable, ValueFormatter>> tables;
        tables.emplace_back("normalized_range", percentile_table(normalized),
                            fixed_formatter(6));
        tables.emplace_back("absolute_range", percentile_table(absolute), integer_formatter());
        if (!hop_samples.empty()) {
            const Ecdf hops = Ecdf::from_samples(std::move(hop_samples));
            const Ecdf durations = Ecdf::from_samples(std::move(duration_samples));
            {
                std::ofstream out(out_dir / "topological_ecdf.csv");
                write_ecdf_csv(out, hops, integer_formatter());
            }
            {
                std::ofstream out(out_dir / "temporal_ecdf.csv");
                write_ecdf_csv(out, durations, days_formatter());
            }
            tables.emplace_back("topological", percentile_table(hops), integer_formatter());
            tables.emplace_back("temporal_days", percentile_table(durations), days_formatter());
        } else {
            // no reachable pair anywhere; emit headers only
            std::ofstream(out_dir / "topological_ecdf.csv") << "value,cum_fraction\n";
            std::ofstream(out_dir / "temporal_ecdf.csv") << "value,cum_fraction\n";
        }
        {
            std::ofstream out(out_dir / "percentiles.csv");
            write_percentiles_csv(out, tables);
        }
        {
            std::ofstream out(out_dir / "bounds.csv");
            write_bounds_csv(out, bound_histogram);
        }
        {
            std::vector<double> fractions;
            fractions.reserve(percentiles.size());
            for (double p : percentiles) fractions.push_back(p / 100.0);
            const GrowthBands bands = growth_bands(curves, grid, fractions);
            std::ofstream out(out_dir / "growth_bands.csv");
            write_growth_bands_csv(out, bands);
        }
        {
            // The manifest echoes only result-affecting parameters, so runs
            // with different worker counts stay byte-identical.
            nlohmann::json manifest{
                {"tool", "crnet"},
                {"version", CRNET_VERSION},
                {"subcommand", "analyze"},
                {"input", {{"path", opt.graph_path}, {"sha256", sha256_hex_file(opt.graph_path)}}},
                {"parameters",
                 {{"grid_hours", opt.grid_hours},
                  {"percentiles", percentiles},
                  {"witness", opt.witness}}},
                {"outputs", names}};
            std::ofstream out(out_dir / "run_manifest.json");
            out << manifest.dump(2) << '\n';
        }
        std::cout << "analyzed " << n << " participants, " << graph.channel_count()
                  << " channels -> " << out_dir.string() << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "crnet analyze: " << e.what() << "\n";
        return kExitData;
    }
}

void print_table(std::ostream& out, const std::string& title, const PercentileTable& table,
                 const ValueFormatter& format) {
    out << title << "\n";
    out << "      p      lower      upper\n";
    for (const auto& row : table.rows) {
        out << "   " << format_fixed(row.p, 2) << "   " << format(row.lower) << "   "
            << format(row.upper) << "\n";
    }
    out << "    max              " << format(table.max) << "\n";
}

int run_report(const ReportOptions& opt) {
    if (opt.format != "text" && opt.format != "csv" && opt.format != "json") {
        std::cerr << "crnet report: --format must be text, csv or json\n";
        return kExitConfig;
    }
    try {
        const GraphFile file = read_graph_file(opt.graph_path);
        std::map<BoundClass, std::size_t> bound_histogram;
        for (const auto& channel : file.channels) {
            if (intersects(channel, file.window)) {
                ++bound_histogram[classify_bound(channel, file.window)];
            }
        }
        const TemporalHypergraph graph = build_graph(file.channels, file.window);
        const SuccessorDag dag = build_successor_dag(graph);
        const auto summaries = all_sources_summary(graph, dag, opt.workers);
        const std::size_t n = graph.participant_count();

        const Ecdf normalized = normalized_ranges(summaries, n);
        std::vector<double> absolute;
        absolute.reserve(summaries.size());
        for (const auto& s : summaries) absolute.push_back(static_cast<double>(s.horizon_size()));
        const Ecdf absolute_ecdf = Ecdf::from_samples(std::move(absolute));

        bool any_pair = false;
        for (const auto& s : summaries) any_pair = any_pair || !s.targets.empty();
        std::optional<std::pair<Ecdf, Ecdf>> distances;
        if (any_pair) {
            distances = distance_ecdfs(summaries);
        }

        if (opt.format == "json") {
            auto table_json = [](const PercentileTable& table) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& row : table.rows) {
                    rows.push_back({{"p", row.p}, {"lower", row.lower}, {"upper", row.upper}});
                }
                return nlohmann::json{{"rows", rows}, {"max", table.max}};
            };
            nlohmann::json j{{"participants", n},
                             {"channels", graph.channel_count()},
                             {"window",
                              {{"start", graph.window().start.seconds},
                               {"end", graph.window().end.seconds}}},
                             {"normalized_range", table_json(percentile_table(normalized))},
                             {"absolute_range", table_json(percentile_table(absolute_ecdf))}};
            nlohmann::json bounds;
            for (const auto& [cls, count] : bound_histogram) {
                bounds[to_string(cls)] = count;
            }
            j["bounds"] = bounds;
            if (distances) {
                j["topological"] = table_json(percentile_table(distances->first));
                nlohmann::json temporal = table_json(percentile_table(distances->second));
                j["temporal_seconds"] = temporal;
            }
            std::cout << j.dump(2) << "\n";
        } else if (opt.format == "csv") {
            std::vector<std::tuple<std::string, PercentileTable, ValueFormatter>> tables;
            tables.emplace_back("normalized_range", percentile_table(normalized),
                                fixed_formatter(6));
            tables.emplace_back("absolute_range", percentile_table(absolute_ecdf),
                                integer_formatter());
            if (distances) {
                tables.emplace_back("topological", percentile_table(distances->first),
                                    integer_formatter());
                tables.emplace_back("temporal_days", percentile_table(distances->second),
                                    days_formatter());
            }
            write_percentiles_csv(std::cout, tables);
        } else {
            std::cout << "participants: " << n << "\nchannels: " << graph.channel_count()
                      << "\nwindow: [" << graph.window().start.seconds << ", "
                      << graph.window().end.seconds << "] ("
                      << format_fixed(seconds_to_days(
                             static_cast<double>(graph.window().length())), 1)
                      << " days)\n\n";
            print_table(std::cout, "normalized information diffusion range",
                        percentile_table(normalized), fixed_formatter(2));
            std::cout << "\n";
            print_table(std::cout, "absolute information diffusion range",
                        percentile_table(absolute_ecdf), integer_formatter());
            std::cout << "\n";
            if (distances) {
                std::cout << "topological distance (hops): median "
                          << integer_formatter()(distances->first.quantile(0.5)) << ", max "
                          << integer_formatter()(distances->first.max()) << "\n";
                std::cout << "temporal distance: median "
                          << days_formatter()(distances->second.quantile(0.5)) << " days, max "
                          << days_formatter()(distances->second.max()) << " days\n";
            } else {
                std::cout << "no reachable pairs\n";
            }
            std::cout << "\n";
            print_bound_histogram(std::cout, bound_histogram);
        }
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "crnet report: " << e.what() << "\n";
        return kExitData;
    }
}

int run_selfcheck(const SelfcheckOptions& opt) {
    if (opt.random_count < 0) {
        std::cerr << "crnet selfcheck: --random must be >= 0\n";
        return kExitConfig;
    }
    const int hop_bias = std::getenv("CRNET_SELFCHECK_PERTURB") ? 1 : 0;

    struct Fixture {
        std::string name;
        TemporalHypergraph graph;
    };
    std::vector<Fixture> all;
    all.push_back({"example-forward", fixtures::example_network(1, 2, 4, 3)});
    all.push_back({"example-blocked", fixtures::example_network(3, 2, 2, 2)});
    all.push_back({"example-tied", fixtures::example_network(1, 2, 2, 2)});
    for (int k = 0; k < opt.random_count; ++k) {
        all.push_back({"random-" + std::to_string(k + 1),
                       fixtures::random_network(7001 + static_cast<std::uint64_t>(k))});
    }

    std::vector<Fixture> selected;
    for (auto& fixture : all) {
        if (opt.filter.empty() || fixture.name.find(opt.filter) != std::string::npos) {
            selected.push_back(std::move(fixture));
        }
    }
    if (selected.empty()) {
        std::cerr << "crnet selfcheck: fixture list is empty (filter '" << opt.filter << "')\n";
        return kExitConfig;
    }

    bool all_ok = true;
    for (const auto& fixture : selected) {
        const auto mismatch = fixtures::compare_engine_to_oracle(fixture.graph, hop_bias);
        if (mismatch) {
            all_ok = false;
            std::cout << "FAIL " << fixture.name << ": " << *mismatch << "\n";
        } else {
            std::cout << "ok   " << fixture.name << "\n";
        }
    }
    std::cout << (all_ok ? "selfcheck passed" : "selfcheck FAILED") << " (" << selected.size()
              << " fixtures)\n";
    return all_ok ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"upper bound of information diffusion in code review networks"};
    app.set_version_flag("--version", std::string("crnet ") + CRNET_VERSION);
    app.require_subcommand(1);

    IngestOptions ingest_opt;
    auto* ingest = app.add_subcommand(
        "ingest", "build a graph file from a code review interaction log");
    ingest->add_option("--events", ingest_opt.events_path, "events CSV or JSON-lines file")
        ->required()
        ->envname("CRNET_EVENTS");
    ingest->add_option("--format", ingest_opt.format, "events format: csv, jsonl or auto")
        ->check(CLI::IsMember({"auto", "csv", "jsonl"}));
    ingest->add_option("--monday", ingest_opt.monday, "window start, a Monday (YYYY-MM-DD, UTC)")
        ->required()
        ->envname("CRNET_MONDAY");
    ingest->add_option("--weeks", ingest_opt.weeks, "window length in weeks")
        ->check(CLI::PositiveNumber)
        ->envname("CRNET_WEEKS");
    ingest->add_option("--bots", ingest_opt.bots_path, "bot ids/patterns, one per line")
        ->envname("CRNET_BOTS");
    ingest->add_option("--salt", ingest_opt.salt, "anonymization salt")->envname("CRNET_SALT");
    ingest->add_flag("--no-anonymize", ingest_opt.no_anonymize,
                     "keep raw participant ids (testing only)");
    ingest
        ->add_option("--include-kinds", ingest_opt.kinds,
                     "event kinds to keep (default: all five)")
        ->delimiter(',');
    ingest->add_option("-o,--output", ingest_opt.output, "graph JSON output path")->required();
    ingest->add_option("--report", ingest_opt.report_path,
                       "ingest report path (default: report.json next to the graph)");

    AnalyzeOptions analyze_opt;
    auto* analyze =
        app.add_subcommand("analyze", "compute diffusion metrics and write report CSVs");
    analyze->add_option("--graph", analyze_opt.graph_path, "graph JSON file")->required();
    analyze->add_option("-o,--out", analyze_opt.out_dir, "output directory")->required();
    analyze
        ->add_option("--grid-hours", analyze_opt.grid_hours,
                     "growth grid resolution in hours (must divide the window)")
        ->envname("CRNET_GRID_HOURS");
    analyze
        ->add_option("--percentiles", analyze_opt.percentiles,
                     "growth band percentiles, in percent")
        ->delimiter(',');
    analyze->add_option("--workers", analyze_opt.workers, "worker threads (0 = all cores)")
        ->envname("CRNET_WORKERS");
    analyze->add_flag("--witness", analyze_opt.witness,
                      "also write witnesses.csv with one minimal journey per pair");

    ReportOptions report_opt;
    auto* report = app.add_subcommand("report", "print summary tables for a graph file");
    report->add_option("--graph", report_opt.graph_path, "graph JSON file")->required();
    report->add_option("--format", report_opt.format, "text, csv or json")
        ->envname("CRNET_FORMAT");
    report->add_option("--workers", report_opt.workers, "worker threads (0 = all cores)")
        ->envname("CRNET_WORKERS");

    SelfcheckOptions selfcheck_opt;
    auto* selfcheck =
        app.add_subcommand("selfcheck", "verify the engine against the brute-force oracle");
    selfcheck->add_option("--random", selfcheck_opt.random_count,
                          "number of seeded random fixtures");
    selfcheck->add_option("--filter", selfcheck_opt.filter, "run only fixtures whose name matches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (ingest->parsed()) return run_ingest(ingest_opt);
        if (analyze->parsed()) return run_analyze(analyze_opt);
        if (report->parsed()) return run_report(report_opt);
        if (selfcheck->parsed()) return run_selfcheck(selfcheck_opt);
    } catch (const std::exception& e) {
        std::cerr << "crnet: " << e.what() << "\n";
        return kExitData;
    }
    return kExitConfig;
}
