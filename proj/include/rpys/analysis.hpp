#pragma once

#include <filesystem>
#include <optional>

#include "rpys/ingest.hpp"
#include "rpys/report.hpp"

namespace rpys {

struct AnalysisResult {
    Spectrum spectrum;
    std::vector<WorkCluster> clusters;
    std::vector<Peak> peaks;
    RunReport report;
};

/// The full pipeline over an in-memory corpus: reference parsing, work
/// clustering, spectrum, peak detection and attribution.
/// Throws EmptyCorpus when the corpus has no records and EmptyRange when no
/// reference falls inside the configured year range.
AnalysisResult analyze_corpus(const Corpus& corpus, const AnalysisConfig& cfg);

struct OutputPaths {
    std::optional<std::filesystem::path> spectrum_csv;
    std::optional<std::filesystem::path> report_md;
    std::optional<std::filesystem::path> plot_svg;
};

/// Load a corpus file, analyze it, and write whichever artifacts have paths.
RunReport run_analysis(const std::filesystem::path& input, CorpusFormat format,
                       const AnalysisConfig& cfg, const OutputPaths& outputs);

}  // namespace rpys
