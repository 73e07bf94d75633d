#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "rpys/peaks.hpp"
#include "rpys/rng.hpp"

using namespace rpys;

namespace {

// Build a spectrum directly from a count series starting at min_year.
Spectrum spectrum_of(int min_year, std::vector<int> counts, int halfwidth,
                     DeviationMode mode = DeviationMode::Signed) {
    Spectrum s;
    s.min_year = min_year;
    s.max_year = min_year + static_cast<int>(counts.size()) - 1;
    s.counts = std::move(counts);
    s.medians.resize(s.counts.size());
    s.deviations.resize(s.counts.size());
    for (std::size_t i = 0; i < s.counts.size(); ++i) {
        s.medians[i] = windowed_median(s.counts, i, halfwidth);
        const double dev = s.counts[i] - s.medians[i];
        s.deviations[i] = mode == DeviationMode::Absolute ? std::abs(dev) : dev;
        s.total += s.counts[i];
    }
    return s;
}

AnalysisConfig config_with(int min_peak_count) {
    AnalysisConfig cfg;
    cfg.min_peak_count = min_peak_count;
    return cfg;
}

std::vector<int> years_of(const std::vector<Peak>& peaks) {
    std::vector<int> years;
    for (const Peak& p : peaks) years.push_back(p.year);
    return years;
}

WorkCluster cluster_at(int year, int count, const char* source) {
    WorkCluster c;
    c.canonical_key = WorkKey{"A", year, source};
    c.count = count;
    return c;
}

}  // namespace

TEST_CASE("detect_peaks: isolated spike") {
    Spectrum s = spectrum_of(1900, {10, 10, 30, 10, 10}, 2);
    auto peaks = detect_peaks(s, config_with(10));
    CHECK(years_of(peaks) == std::vector<int>{1902});
    CHECK(peaks[0].count == 30);
    CHECK(peaks[0].deviation == 20.0);
}

TEST_CASE("detect_peaks: constant series has no peaks") {
    Spectrum s = spectrum_of(1900, {20, 20, 20, 20, 20}, 2);
    CHECK(detect_peaks(s, config_with(10)).empty());
}

TEST_CASE("detect_peaks: plateau resolves to its earliest year") {
    // Deviations tie over 1900-1901; only 1900 qualifies.
    Spectrum s = spectrum_of(1898, {10, 10, 25, 25, 10, 10, 10}, 2);
    const auto i1900 = s.index_of(1900);
    REQUIRE(s.deviations[i1900] == s.deviations[i1900 + 1]);
    REQUIRE(s.deviations[i1900] > 0);
    CHECK(years_of(detect_peaks(s, config_with(10))) == std::vector<int>{1900});
}

TEST_CASE("detect_peaks: count threshold filters years") {
    Spectrum s = spectrum_of(1900, {2, 2, 9, 2, 2}, 2);
    CHECK(detect_peaks(s, config_with(10)).empty());
    CHECK(years_of(detect_peaks(s, config_with(9))) == std::vector<int>{1902});
}

TEST_CASE("detect_peaks: raising the threshold never adds peaks") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> counts(20);
        for (auto& c : counts) c = static_cast<int>(rng.below(30));
        Spectrum s = spectrum_of(1900, counts, 2);
        std::size_t prev = detect_peaks(s, config_with(0)).size();
        for (int threshold = 1; threshold <= 30; ++threshold) {
            const auto n = detect_peaks(s, config_with(threshold)).size();
            CHECK(n <= prev);
            prev = n;
        }
    }
}

TEST_CASE("detect_peaks: boundary years can be peaks") {
    Spectrum left = spectrum_of(1900, {30, 10, 10, 10}, 2);
    CHECK(years_of(detect_peaks(left, config_with(10))) == std::vector<int>{1900});
    Spectrum right = spectrum_of(1900, {10, 10, 10, 30}, 2);
    CHECK(years_of(detect_peaks(right, config_with(10))) == std::vector<int>{1903});
}

TEST_CASE("detect_peaks: negative deviations are never peaks") {
    Spectrum s = spectrum_of(1900, {30, 30, 12, 30, 30}, 2);
    const auto dip = s.index_of(1902);
    REQUIRE(s.deviations[dip] < 0);
    CHECK(detect_peaks(s, config_with(10)).empty());
}

TEST_CASE("detect_peaks: detection uses the signed series under Absolute mode") {
    // The dip has the largest absolute deviation; it must not become a peak.
    Spectrum s = spectrum_of(1900, {30, 30, 12, 30, 31}, 2, DeviationMode::Absolute);
    AnalysisConfig cfg = config_with(10);
    cfg.deviation_mode = DeviationMode::Absolute;
    auto peaks = detect_peaks(s, cfg);
    for (const Peak& p : peaks) CHECK(p.year != 1902);
}

TEST_CASE("detect_peaks: single-year spectrum") {
    Spectrum flat = spectrum_of(1900, {15}, 0);
    CHECK(detect_peaks(flat, config_with(10)).empty());  // deviation 0

    Spectrum s = spectrum_of(1900, {15, 3}, 1);
    REQUIRE(s.deviations[0] > 0);
    CHECK(years_of(detect_peaks(s, config_with(10))) == std::vector<int>{1900});
}

TEST_CASE("detect_peaks matches the exhaustive predicate on random spectra") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> counts(1 + rng.below(50));
        for (auto& c : counts) c = static_cast<int>(rng.below(25));
        Spectrum s = spectrum_of(1880, counts, static_cast<int>(rng.below(4)));
        AnalysisConfig cfg = config_with(static_cast<int>(rng.below(12)));
        CAPTURE(trial);
        CHECK(years_of(detect_peaks(s, cfg)) == oracles::peak_years(s, cfg));
    }
}

TEST_CASE("attribute_peak: ranks clusters by count, ties by key") {
    std::vector<WorkCluster> clusters = {
        cluster_at(1947, 144, "DARWINS FINCHES"), cluster_at(1947, 5, "ZEBRA STUD"),
        cluster_at(1947, 5, "ALPHA STUD"),        cluster_at(1947, 7, "BETA STUD"),
        cluster_at(1946, 99, "WRONG YEAR"),
    };
    Peak p = attribute_peak(1947, clusters, 3);
    CHECK(p.year == 1947);
    CHECK(p.count == 161);
    REQUIRE(p.top_clusters.size() == 3);
    CHECK(p.top_clusters[0].count == 144);
    CHECK(p.top_clusters[1].count == 7);
    CHECK(p.top_clusters[2].canonical_key.source_norm == "ALPHA STUD");
    CHECK(p.top_share == doctest::Approx(144.0 / 161.0).epsilon(1e-12));
}

TEST_CASE("attribute_peak: fewer clusters than k") {
    std::vector<WorkCluster> clusters = {cluster_at(1947, 144, "DARWINS FINCHES")};
    Peak p = attribute_peak(1947, clusters, 5);
    CHECK(p.top_clusters.size() == 1);
    CHECK(p.top_share == 1.0);
}

TEST_CASE("attribute_peak: k must be positive") {
    std::vector<WorkCluster> clusters = {cluster_at(1947, 144, "DARWINS FINCHES")};
    CHECK_THROWS_AS(attribute_peak(1947, clusters, 0), std::invalid_argument);
}

TEST_CASE("attribute_peak: no clusters at the year") {
    std::vector<WorkCluster> clusters = {cluster_at(1946, 144, "DARWINS FINCHES")};
    CHECK_THROWS_AS(attribute_peak(1947, clusters, 5), NoClustersAtYear);
}

TEST_CASE("attribute_peaks: attribution conserves the spectrum") {
    std::vector<WorkCluster> clusters = {
        cluster_at(1900, 10, "AAA"), cluster_at(1900, 2, "BBB"), cluster_at(1900, 8, "CCC"),
        cluster_at(1898, 4, "DDD"),  cluster_at(1902, 4, "EEE"),
    };
    AnalysisConfig cfg;
    cfg.min_year = 1896;
    cfg.max_year = 1904;
    cfg.min_peak_count = 10;
    cfg.top_k = 2;
    Spectrum s = build_spectrum(clusters, cfg);
    auto peaks = attribute_peaks(s, cfg, clusters);
    REQUIRE(peaks.size() == 1);
    const Peak& p = peaks[0];
    CHECK(p.year == 1900);
    CHECK(p.count == s.counts[s.index_of(1900)]);
    CHECK(p.deviation > 0);
    CHECK(p.top_clusters.size() == 2);
    int top_sum = 0;
    for (const auto& c : p.top_clusters) top_sum += c.count;
    CHECK(top_sum <= p.count);
    CHECK(p.top_share == doctest::Approx(10.0 / 20.0).epsilon(1e-12));
}
