#include "rpys/report.hpp"

#include <algorithm>
#include <cstdio>

namespace rpys {

std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // flush -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

namespace {

std::string format_fixed(double v, int decimals) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string share_as_text(const Peak& p) {
    const int top = p.top_clusters.empty() ? 0 : p.top_clusters.front().count;
    return std::to_string(top) + "/" + std::to_string(p.count) + " (" +
           format_fixed(p.top_share, 3) + ")";
}

const char* mode_name(DeviationMode m) {
    return m == DeviationMode::Signed ? "signed" : "absolute";
}

}  // namespace

std::string emit_spectrum_csv(const Spectrum& spectrum) {
    std::string out = "year,count,median,deviation\n";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        out += std::to_string(spectrum.year_at(i));
        out += ',';
        out += std::to_string(spectrum.counts[i]);
        out += ',';
        out += format_real(spectrum.medians[i]);
        out += ',';
        out += format_real(spectrum.deviations[i]);
        out += '\n';
    }
    return out;
}

std::string emit_report_md(const RunReport& report) {
    const AnalysisConfig& cfg = report.config;
    std::string md;
    md += "# RPYS Analysis Report\n\n";

    md += "## Configuration\n\n";
    md += "| parameter | value |\n| --- | --- |\n";
    md += "| year range | " + std::to_string(cfg.min_year) + "-" + std::to_string(cfg.max_year) +
          " |\n";
    md += "| median window | " + std::to_string(2 * cfg.window_halfwidth + 1) + " years (halfwidth " +
          std::to_string(cfg.window_halfwidth) + ") |\n";
    md += "| min peak count | " + std::to_string(cfg.min_peak_count) + " |\n";
    md += "| deviation mode | " + std::string(mode_name(cfg.deviation_mode)) + " |\n";
    md += "| count multiplicity | " + std::string(cfg.count_multiplicity ? "on" : "off") + " |\n";
    md += "| fuzzy threshold | " + std::to_string(cfg.fuzzy_threshold) + " |\n";
    md += "| top k | " + std::to_string(cfg.top_k) + " |\n\n";

    md += "## Corpus\n\n";
    md += "| metric | value |\n| --- | --- |\n";
    md += "| records | " + std::to_string(report.records) + " |\n";
    md += "| raw references | " + std::to_string(report.raw_references) + " |\n";
    md += "| parsed | " + std::to_string(report.tally.parsed) + " |\n";
    md += "| no year | " + std::to_string(report.tally.no_year) + " |\n";
    md += "| malformed | " + std::to_string(report.tally.malformed) + " |\n\n";

    md += "## Spectrum\n\n";
    md += std::to_string(cfg.max_year - cfg.min_year + 1) + " years (" +
          std::to_string(cfg.min_year) + "-" + std::to_string(cfg.max_year) + "), " +
          std::to_string(report.in_range_total) + " citations in range.\n\n";

    md += "## Peaks\n\n";
    if (report.peaks.empty()) {
        md += "No peaks detected.\n";
        return md;
    }
    md += "| year | count | deviation | top work | top share |\n";
    md += "| --- | --- | --- | --- | --- |\n";
    for (const Peak& p : report.peaks) {
        const std::string work =
            p.top_clusters.empty() ? "-" : p.top_clusters.front().canonical_key.display();
        md += "| " + std::to_string(p.year) + " | " + std::to_string(p.count) + " | " +
              format_real(p.deviation) + " | " + work + " | " + share_as_text(p) + " |\n";
    }
    for (const Peak& p : report.peaks) {
        md += "\n### Peak " + std::to_string(p.year) + "\n\n";
        md += "| rank | work | citing records |\n| --- | --- | --- |\n";
        int rank = 1;
        for (const WorkCluster& c : p.top_clusters) {
            md += "| " + std::to_string(rank++) + " | " + c.canonical_key.display() + " | " +
                  std::to_string(c.count) + " |\n";
        }
    }
    return md;
}

namespace {

// Layout constants for the two-panel plot.
constexpr double kWidth = 880;
constexpr double kPanelHeight = 180;
constexpr double kPanelGap = 50;
constexpr double kMarginLeft = 56;
constexpr double kMarginRight = 16;
constexpr double kMarginTop = 24;
constexpr double kMarginBottom = 32;

std::string num(double v) { return format_fixed(v, 2); }

void append_text(std::string& svg, double x, double y, const std::string& anchor,
                 const std::string& text, int size = 11) {
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" +
           std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + text + "</text>\n";
}

void append_bar(std::string& svg, double x, double y, double w, double h,
                const std::string& fill) {
    if (h <= 0) return;
    svg += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
}

}  // namespace

std::string emit_plot_svg(const Spectrum& spectrum, std::span<const Peak> peaks) {
    const std::size_t n = spectrum.size();
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double bar_w = plot_w / static_cast<double>(n);
    const double total_h = kMarginTop + 2 * kPanelHeight + kPanelGap + kMarginBottom;

    int max_count = 1;
    double max_abs_dev = 1e-9;
    for (std::size_t i = 0; i < n; ++i) {
        max_count = std::max(max_count, spectrum.counts[i]);
        max_abs_dev = std::max(max_abs_dev, std::abs(spectrum.deviations[i]));
    }

    std::vector<bool> is_peak(n, false);
    for (const Peak& p : peaks) {
        if (spectrum.contains(p.year)) is_peak[spectrum.index_of(p.year)] = true;
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(total_h) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(total_h) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Panel 1: counts.
    const double p1_top = kMarginTop;
    const double p1_base = p1_top + kPanelHeight;
    append_text(svg, kMarginLeft, p1_top - 8, "start", "cited references per year");
    append_text(svg, kMarginLeft - 6, p1_top + 10, "end", std::to_string(max_count), 10);
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(p1_base) + "\" x2=\"" +
           num(kWidth - kMarginRight) + "\" y2=\"" + num(p1_base) +
           "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double h = kPanelHeight * spectrum.counts[i] / max_count;
        const double x = kMarginLeft + bar_w * static_cast<double>(i);
        append_bar(svg, x, p1_base - h, std::max(bar_w - 0.4, 0.4), h,
                   is_peak[i] ? "#c0392b" : "#4878a8");
        if (is_peak[i]) {
            append_text(svg, x + bar_w / 2, p1_base - h - 4, "middle",
                        std::to_string(spectrum.year_at(i)), 10);
        }
    }

    // Panel 2: deviation from the windowed median.
    const double p2_top = p1_base + kPanelGap;
    double neg_extent = 0;
    for (std::size_t i = 0; i < n; ++i) {
        neg_extent = std::max(neg_extent, -spectrum.deviations[i]);
    }
    const double span = max_abs_dev + neg_extent;
    const double zero_y = p2_top + kPanelHeight * (max_abs_dev / (span > 0 ? span : 1.0));
    append_text(svg, kMarginLeft, p2_top - 8, "start", "deviation from windowed median");
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(zero_y) + "\" x2=\"" +
           num(kWidth - kMarginRight) + "\" y2=\"" + num(zero_y) +
           "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double d = spectrum.deviations[i];
        const double h = kPanelHeight * std::abs(d) / (span > 0 ? span : 1.0);
        const double x = kMarginLeft + bar_w * static_cast<double>(i);
        const double y = d >= 0 ? zero_y - h : zero_y;
        append_bar(svg, x, y, std::max(bar_w - 0.4, 0.4), h,
                   is_peak[i] ? "#c0392b" : "#7aa05a");
        if (is_peak[i]) {
            append_text(svg, x + bar_w / 2, y - 4, "middle",
                        std::to_string(spectrum.year_at(i)), 10);
        }
    }

    // Year axis under the lower panel.
    const double axis_y = p2_top + kPanelHeight + 16;
    const int first = spectrum.min_year;
    const int last = spectrum.max_year;
    for (int year = first; year <= last; ++year) {
        const bool labeled = year == first || year == last ||
                             (year % 20 == 0 && year - first >= 5 && last - year >= 5);
        if (!labeled) continue;
        const double x =
            kMarginLeft + bar_w * (static_cast<double>(year - first) + 0.5);
        append_text(svg, x, axis_y, "middle", std::to_string(year), 10);
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace rpys
