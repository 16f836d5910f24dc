#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "crnet/channel.hpp"
#include "crnet/engine.hpp"

namespace crnet {

/// Empirical cumulative distribution over a sample multiset. Stores the
/// distinct values ascending with exact cumulative counts; fractions are
/// strictly increasing and end at 1.0.
class Ecdf {
public:
    static Ecdf from_samples(std::vector<double> samples);  // throws EmptyInput

    const std::vector<double>& values() const { return values_; }
    const std::vector<std::size_t>& cumulative_counts() const { return cum_counts_; }
    std::size_t sample_count() const { return n_; }
    std::vector<double> fractions() const;

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }

    /// Nearest-rank quantile: the ceil(p*n)-th smallest sample.
    double quantile(double p) const;

    /// Fraction of samples <= v.
    double fraction_at_or_below(double v) const;

private:
    std::vector<double> values_;
    std::vector<std::size_t> cum_counts_;
    std::size_t n_ = 0;
};

inline constexpr std::array<double, 4> kTablePercentiles{0.70, 0.50, 0.30, 0.10};

struct PercentileRow {
    double p;
    double lower;  // quantile(p)
    double upper;  // sample maximum
};

/// The p in {0.70, 0.50, 0.30, 0.10} rows plus the maximum, table layout
/// used throughout the reports.
struct PercentileTable {
    std::vector<PercentileRow> rows;
    double max = 0;
};

PercentileTable percentile_table(const Ecdf& ecdf);

/// One sample per participant: horizon_size / n_participants.
Ecdf normalized_ranges(const std::vector<DistanceSummary>& summaries,
                       std::size_t n_participants);
Ecdf normalized_ranges_from_sizes(const std::vector<std::size_t>& horizon_sizes,
                                  std::size_t n_participants);

/// Pools min_hops and min_duration (seconds) over all ordered reachable
/// pairs. Throws EmptyInput when no pair is reachable.
std::pair<Ecdf, Ecdf> distance_ecdfs(const std::vector<DistanceSummary>& summaries);

/// Per grid instant, the requested percentiles of the horizon-growth counts
/// across all sources. values[t][k] pairs with percentiles[k].
struct GrowthBands {
    std::vector<TimeInstant> grid;
    std::vector<double> percentiles;
    std::vector<std::vector<std::size_t>> values;
};

/// All curves must share the grid length. Throws GridMismatch, EmptyInput.
GrowthBands growth_bands(const std::vector<std::vector<std::size_t>>& curves,
                         const std::vector<TimeInstant>& grid,
                         const std::vector<double>& percentiles);

// --- report files ---------------------------------------------------------

std::string format_fixed(double value, int decimals);
inline double seconds_to_days(double seconds) { return seconds / kSecondsPerDay; }

using ValueFormatter = std::function<std::string(double)>;

ValueFormatter integer_formatter();
ValueFormatter fixed_formatter(int decimals);
ValueFormatter days_formatter();  // seconds in, days with 3 decimals out

void write_horizons_csv(std::ostream& out,
                        const std::vector<std::pair<ParticipantId, std::size_t>>& sizes,
                        std::size_t n_participants);
void write_ecdf_csv(std::ostream& out, const Ecdf& ecdf, const ValueFormatter& format);
void write_percentiles_csv(
    std::ostream& out,
    const std::vector<std::tuple<std::string, PercentileTable, ValueFormatter>>& tables);
void write_bounds_csv(std::ostream& out, const std::map<BoundClass, std::size_t>& histogram);
void write_growth_bands_csv(std::ostream& out, const GrowthBands& bands);

}  // namespace crnet
