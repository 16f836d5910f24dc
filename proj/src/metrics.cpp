#include "crnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "crnet/errors.hpp"

namespace crnet {

Ecdf Ecdf::from_samples(std::vector<double> samples) {
    if (samples.empty()) {
        throw EmptyInput("ECDF needs at least one sample");
    }
    std::sort(samples.begin(), samples.end());
    Ecdf ecdf;
    ecdf.n_ = samples.size();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i + 1 == samples.size() || samples[i + 1] != samples[i]) {
            ecdf.values_.push_back(samples[i]);
            ecdf.cum_counts_.push_back(i + 1);
        }
    }
    return ecdf;
}

std::vector<double> Ecdf::fractions() const {
    std::vector<double> out;
    out.reserve(cum_counts_.size());
    for (std::size_t count : cum_counts_) {
        out.push_back(static_cast<double>(count) / static_cast<double>(n_));
    }
    return out;
}

double Ecdf::quantile(double p) const {
    // Nearest rank with a tolerance so p*n products like 0.55*20 do not
    // creep past the integer they represent.
    double rank = std::ceil(p * static_cast<double>(n_) - 1e-9);
    rank = std::max(1.0, std::min(rank, static_cast<double>(n_)));
    const auto target = static_cast<std::size_t>(rank);
    auto it = std::lower_bound(cum_counts_.begin(), cum_counts_.end(), target);
    return values_[it - cum_counts_.begin()];
}

double Ecdf::fraction_at_or_below(double v) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), v);
    if (it == values_.begin()) return 0.0;
    return static_cast<double>(cum_counts_[it - values_.begin() - 1]) /
           static_cast<double>(n_);
}

PercentileTable percentile_table(const Ecdf& ecdf) {
    PercentileTable table;
    table.max = ecdf.max();
    for (double p : kTablePercentiles) {
        table.rows.push_back(PercentileRow{p, ecdf.quantile(p), table.max});
    }
    return table;
}

Ecdf normalized_ranges_from_sizes(const std::vector<std::size_t>& horizon_sizes,
                                  std::size_t n_participants) {
    if (n_participants == 0) {
        throw EmptyInput("normalized_ranges needs n_participants > 0");
    }
    if (horizon_sizes.empty()) {
        throw EmptyInput("normalized_ranges needs at least one summary");
    }
    std::vector<double> samples;
    samples.reserve(horizon_sizes.size());
    for (std::size_t size : horizon_sizes) {
        samples.push_back(static_cast<double>(size) / static_cast<double>(n_participants));
    }
    return Ecdf::from_samples(std::move(samples));
}

Ecdf normalized_ranges(const std::vector<DistanceSummary>& summaries,
                       std::size_t n_participants) {
    std::vector<std::size_t> sizes;
    sizes.reserve(summaries.size());
    for (const auto& summary : summaries) {
        sizes.push_back(summary.horizon_size());
    }
    return normalized_ranges_from_sizes(sizes, n_participants);
}

std::pair<Ecdf, Ecdf> distance_ecdfs(const std::vector<DistanceSummary>& summaries) {
    std::vector<double> hops;
    std::vector<double> durations;
    for (const auto& summary : summaries) {
        for (const auto& target : summary.targets) {
            hops.push_back(static_cast<double>(target.min_hops));
            durations.push_back(static_cast<double>(target.min_duration));
        }
    }
    if (hops.empty()) {
        throw EmptyInput("distance_ecdfs needs at least one reachable pair");
    }
    return {Ecdf::from_samples(std::move(hops)), Ecdf::from_samples(std::move(durations))};
}

GrowthBands growth_bands(const std::vector<std::vector<std::size_t>>& curves,
                         const std::vector<TimeInstant>& grid,
                         const std::vector<double>& percentiles) {
    if (curves.empty()) {
        throw EmptyInput("growth_bands needs at least one curve");
    }
    for (const auto& curve : curves) {
        if (curve.size() != grid.size()) {
            throw GridMismatch("every growth curve must share the grid");
        }
    }

    GrowthBands bands;
    bands.grid = grid;
    bands.percentiles = percentiles;
    bands.values.resize(grid.size());

    std::vector<std::size_t> column(curves.size());
    for (std::size_t t = 0; t < grid.size(); ++t) {
        for (std::size_t c = 0; c < curves.size(); ++c) {
            column[c] = curves[c][t];
        }
        std::sort(column.begin(), column.end());
        auto& row = bands.values[t];
        row.reserve(percentiles.size());
        for (double p : percentiles) {
            double rank = std::ceil(p * static_cast<double>(column.size()) - 1e-9);
            rank = std::max(1.0, std::min(rank, static_cast<double>(column.size())));
            row.push_back(column[static_cast<std::size_t>(rank) - 1]);
        }
    }
    return bands;
}

std::string format_fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

ValueFormatter integer_formatter() {
    return [](double v) { return std::to_string(static_cast<long long>(std::llround(v))); };
}

ValueFormatter fixed_formatter(int decimals) {
    return [decimals](double v) { return format_fixed(v, decimals); };
}

ValueFormatter days_formatter() {
    return [](double seconds) { return format_fixed(seconds_to_days(seconds), 3); };
}

void write_horizons_csv(std::ostream& out,
                        const std::vector<std::pair<ParticipantId, std::size_t>>& sizes,
                        std::size_t n_participants) {
    out << "participant,horizon_size,normalized\n";
    for (const auto& [participant, size] : sizes) {
        out << participant << ',' << size << ','
            << format_fixed(static_cast<double>(size) / static_cast<double>(n_participants), 6)
            << '\n';
    }
}

void write_ecdf_csv(std::ostream& out, const Ecdf& ecdf, const ValueFormatter& format) {
    out << "value,cum_fraction\n";
    const auto fractions = ecdf.fractions();
    for (std::size_t i = 0; i < ecdf.values().size(); ++i) {
        out << format(ecdf.values()[i]) << ',' << format_fixed(fractions[i], 6) << '\n';
    }
}

void write_percentiles_csv(
    std::ostream& out,
    const std::vector<std::tuple<std::string, PercentileTable, ValueFormatter>>& tables) {
    out << "metric,p,lower,upper\n";
    for (const auto& [metric, table, format] : tables) {
        for (const auto& row : table.rows) {
            out << metric << ',' << format_fixed(row.p, 2) << ',' << format(row.lower) << ','
                << format(row.upper) << '\n';
        }
        out << metric << ",max," << format(table.max) << ',' << format(table.max) << '\n';
    }
}

void write_bounds_csv(std::ostream& out, const std::map<BoundClass, std::size_t>& histogram) {
    std::size_t total = 0;
    for (const auto& [cls, count] : histogram) {
        total += count;
    }
    out << "class,count,share\n";
    for (BoundClass cls : {BoundClass::Bounded, BoundClass::LeftBounded, BoundClass::RightBounded,
                           BoundClass::Unbounded}) {
        const auto it = histogram.find(cls);
        const std::size_t count = it == histogram.end() ? 0 : it->second;
        const double share = total == 0 ? 0.0 : static_cast<double>(count) / total;
        out << to_string(cls) << ',' << count << ',' << format_fixed(share, 6) << '\n';
    }
}

void write_growth_bands_csv(std::ostream& out, const GrowthBands& bands) {
    out << "t";
    for (double p : bands.percentiles) {
        out << ",p" << static_cast<int>(std::llround(p * 100));
    }
    out << '\n';
    for (std::size_t t = 0; t < bands.grid.size(); ++t) {
        out << bands.grid[t].seconds;
        for (std::size_t k = 0; k < bands.percentiles.size(); ++k) {
            out << ',' << bands.values[t][k];
        }
        out << '\n';
    }
}

}  // namespace crnet
