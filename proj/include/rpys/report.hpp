#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "rpys/peaks.hpp"
#include "rpys/refparse.hpp"

namespace rpys {

/// Aggregated outcome of one analysis run. Deliberately free of paths and
/// timestamps so emitted artifacts depend only on corpus content and flags.
struct RunReport {
    AnalysisConfig config;
    std::size_t records = 0;
    std::size_t raw_references = 0;
    RefTally tally;
    std::int64_t in_range_total = 0;
    std::vector<Peak> peaks;  // sorted by year
};

/// CSV bytes: header "year,count,median,deviation", one row per year
/// ascending (zero-count years included), reals with 6 significant digits,
/// LF line endings.
std::string emit_spectrum_csv(const Spectrum& spectrum);

/// Deterministic Markdown report: config echo, corpus statistics, peaks
/// table, per-peak top-k listing.
std::string emit_report_md(const RunReport& report);

/// Static SVG, two stacked panels (counts, deviation), peak years labeled.
/// Identical inputs yield identical bytes.
std::string emit_plot_svg(const Spectrum& spectrum, std::span<const Peak> peaks);

/// "%.6g" with "-0" normalized to "0"; shared by the CSV and report writers.
std::string format_real(double v);

}  // namespace rpys
