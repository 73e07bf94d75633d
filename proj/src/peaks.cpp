#include "rpys/peaks.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpys {

std::vector<Peak> detect_peaks(const Spectrum& spectrum, const AnalysisConfig& cfg) {
    std::vector<Peak> peaks;
    const std::size_t n = spectrum.size();
    // Signed deviations, whatever mode the spectrum was built in.
    std::vector<double> dev(n);
    for (std::size_t i = 0; i < n; ++i) {
        dev[i] = static_cast<double>(spectrum.counts[i]) - spectrum.medians[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (spectrum.counts[i] < cfg.min_peak_count) continue;
        if (!(dev[i] > 0)) continue;
        // Local maximum; a plateau resolves to its earliest year, so the
        // left comparison is strict and the right one is not. Out-of-range
        // neighbors count as -inf.
        if (i > 0 && !(dev[i] > dev[i - 1])) continue;
        if (i + 1 < n && !(dev[i] >= dev[i + 1])) continue;
        Peak p;
        p.year = spectrum.year_at(i);
        p.count = spectrum.counts[i];
        p.deviation = dev[i];
        peaks.push_back(std::move(p));
    }
    return peaks;  // ascending by construction
}

Peak attribute_peak(int peak_year, std::span<const WorkCluster> clusters, int k) {
    if (k < 1) throw std::invalid_argument("top-k must be >= 1");
    std::vector<WorkCluster> at_year;
    for (const auto& c : clusters) {
        if (c.canonical_key.year == peak_year) at_year.push_back(c);
    }
    if (at_year.empty()) throw NoClustersAtYear(peak_year);

    std::sort(at_year.begin(), at_year.end(), [](const WorkCluster& a, const WorkCluster& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.canonical_key < b.canonical_key;
    });

    Peak p;
    p.year = peak_year;
    for (const auto& c : at_year) p.count += c.count;
    const auto take = std::min(at_year.size(), static_cast<std::size_t>(k));
    p.top_clusters.assign(at_year.begin(), at_year.begin() + static_cast<std::ptrdiff_t>(take));
    p.top_share = static_cast<double>(at_year.front().count) / static_cast<double>(p.count);
    return p;
}

std::vector<Peak> attribute_peaks(const Spectrum& spectrum, const AnalysisConfig& cfg,
                                  std::span<const WorkCluster> clusters) {
    std::vector<Peak> out;
    for (const Peak& detected : detect_peaks(spectrum, cfg)) {
        Peak p = attribute_peak(detected.year, clusters, cfg.top_k);
        p.deviation = detected.deviation;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace rpys
