#pragma once

#include <span>
#include <vector>

#include "rpys/spectrum.hpp"

namespace rpys {

/// A detected spectrum peak with its ranked contributing clusters.
struct Peak {
    int year = 0;
    int count = 0;          // spectrum count at the peak year
    double deviation = 0;   // signed deviation at the peak year (> 0)
    std::vector<WorkCluster> top_clusters;  // descending count, ties by canonical key
    double top_share = 0;   // top cluster count / count
};

/// Detect peak years: count >= cfg.min_peak_count and the signed deviation
/// is positive and a local maximum (strictly above the left neighbor, at
/// least the right neighbor, out-of-range neighbors -inf), so plateaus
/// resolve to their earliest year. Detection always uses the signed series
/// regardless of cfg.deviation_mode. Returned peaks carry year, count and
/// deviation only, sorted ascending by year.
std::vector<Peak> detect_peaks(const Spectrum& spectrum, const AnalysisConfig& cfg);

/// Rank the clusters at peak_year and fill top_clusters/top_share with the
/// k highest counts (fewer if fewer exist). The returned peak's count is the
/// sum over all clusters at that year; deviation is left zero.
/// Throws NoClustersAtYear when the year has no clusters.
Peak attribute_peak(int peak_year, std::span<const WorkCluster> clusters, int k);

/// detect_peaks + attribute_peak for every detected year, k = cfg.top_k.
std::vector<Peak> attribute_peaks(const Spectrum& spectrum, const AnalysisConfig& cfg,
                                  std::span<const WorkCluster> clusters);

}  // namespace rpys
