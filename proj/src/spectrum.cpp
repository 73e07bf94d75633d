#include "rpys/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpys {

void AnalysisConfig::validate() const {
    if (min_year > max_year) throw std::invalid_argument("min_year must be <= max_year");
    if (window_halfwidth < 0) throw std::invalid_argument("window halfwidth must be >= 0");
    if (window_halfwidth > max_year - min_year) {
        throw std::invalid_argument("window halfwidth must be <= max_year - min_year");
    }
    if (min_peak_count < 0) throw std::invalid_argument("min_peak_count must be >= 0");
    if (fuzzy_threshold < 0) throw std::invalid_argument("fuzzy_threshold must be >= 0");
    if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
}

double windowed_median(std::span<const int> counts, std::size_t pos, int halfwidth) {
    const auto h = static_cast<std::size_t>(halfwidth);
    const std::size_t lo = pos >= h ? pos - h : 0;
    const std::size_t hi = std::min(pos + h, counts.size() - 1);
    std::vector<int> window(counts.begin() + static_cast<std::ptrdiff_t>(lo),
                            counts.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    const std::size_t m = window.size();
    auto mid = window.begin() + static_cast<std::ptrdiff_t>(m / 2);
    std::nth_element(window.begin(), mid, window.end());
    if (m % 2 == 1) return static_cast<double>(*mid);
    // Even window: mean of the two middle values; the lower one is the
    // maximum of the left partition after nth_element.
    int upper = *mid;
    int lower = *std::max_element(window.begin(), mid);
    return (static_cast<double>(lower) + static_cast<double>(upper)) / 2.0;
}

Spectrum build_counts(std::span<const WorkCluster> clusters, const AnalysisConfig& cfg) {
    cfg.validate();
    Spectrum s;
    s.min_year = cfg.min_year;
    s.max_year = cfg.max_year;
    s.counts.assign(static_cast<std::size_t>(cfg.max_year - cfg.min_year) + 1, 0);
    s.medians.assign(s.counts.size(), 0.0);
    s.deviations.assign(s.counts.size(), 0.0);
    bool any = false;
    for (const auto& cluster : clusters) {
        const int year = cluster.canonical_key.year;
        if (!s.contains(year)) continue;
        s.counts[s.index_of(year)] += cluster.count;
        s.total += cluster.count;
        any = true;
    }
    if (!any) throw EmptyRange(cfg.min_year, cfg.max_year);
    return s;
}

Spectrum build_spectrum(std::span<const WorkCluster> clusters, const AnalysisConfig& cfg) {
    Spectrum s = build_counts(clusters, cfg);
    for (std::size_t i = 0; i < s.size(); ++i) {
        s.medians[i] = windowed_median(s.counts, i, cfg.window_halfwidth);
        double signed_dev = static_cast<double>(s.counts[i]) - s.medians[i];
        s.deviations[i] =
            cfg.deviation_mode == DeviationMode::Absolute ? std::fabs(signed_dev) : signed_dev;
    }
    return s;
}

}  // namespace rpys
