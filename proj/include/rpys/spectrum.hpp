#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rpys/cluster.hpp"
#include "rpys/errors.hpp"

namespace rpys {

enum class DeviationMode {
    Signed,    // count - median
    Absolute,  // |count - median|
};

struct AnalysisConfig {
    int min_year = 1800;
    int max_year = 1960;
    int window_halfwidth = 2;  // 5-year window
    int min_peak_count = 10;
    DeviationMode deviation_mode = DeviationMode::Signed;
    bool count_multiplicity = false;
    int fuzzy_threshold = 0;
    int top_k = 5;  // clusters listed per peak

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

/// Per-year citation counts over a closed year range plus the derived
/// windowed-median and deviation series. All series span
/// [min_year, max_year] inclusive; years with no citations hold zero.
struct Spectrum {
    int min_year = 0;
    int max_year = 0;
    std::vector<int> counts;
    std::vector<double> medians;
    std::vector<double> deviations;
    std::int64_t total = 0;  // sum of counts

    std::size_t size() const { return counts.size(); }
    int year_at(std::size_t i) const { return min_year + static_cast<int>(i); }
    std::size_t index_of(int year) const { return static_cast<std::size_t>(year - min_year); }
    bool contains(int year) const { return year >= min_year && year <= max_year; }
};

/// Median of counts[pos-halfwidth .. pos+halfwidth] intersected with the
/// series range (windows truncate at the boundaries). An even-sized window
/// yields the mean of the two middle values.
double windowed_median(std::span<const int> counts, std::size_t pos, int halfwidth);

/// Counts only; medians/deviations left zero. Throws EmptyRange when no
/// cluster year falls inside [cfg.min_year, cfg.max_year].
Spectrum build_counts(std::span<const WorkCluster> clusters, const AnalysisConfig& cfg);

/// Full spectrum: counts, windowed medians, deviations per cfg.deviation_mode.
Spectrum build_spectrum(std::span<const WorkCluster> clusters, const AnalysisConfig& cfg);

}  // namespace rpys
