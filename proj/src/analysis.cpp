#include "rpys/analysis.hpp"

#include <fstream>

namespace rpys {

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("failed writing output file: " + path.string());
}

}  // namespace

AnalysisResult analyze_corpus(const Corpus& corpus, const AnalysisConfig& cfg) {
    cfg.validate();
    if (corpus.records.empty()) throw EmptyCorpus();

    ParsedRefs parsed = parse_all(corpus, default_max_reference_year());
    std::vector<WorkCluster> clusters = cluster_exact(parsed.refs, cfg.count_multiplicity);
    if (cfg.fuzzy_threshold > 0) {
        clusters = cluster_fuzzy(std::move(clusters), cfg.fuzzy_threshold,
                                 cfg.count_multiplicity);
    }

    AnalysisResult result;
    result.spectrum = build_spectrum(clusters, cfg);
    result.peaks = attribute_peaks(result.spectrum, cfg, clusters);
    result.clusters = std::move(clusters);

    result.report.config = cfg;
    result.report.records = corpus.records.size();
    result.report.raw_references = parsed.refs.size();
    result.report.tally = parsed.tally;
    result.report.in_range_total = result.spectrum.total;
    result.report.peaks = result.peaks;
    return result;
}

RunReport run_analysis(const std::filesystem::path& input, CorpusFormat format,
                       const AnalysisConfig& cfg, const OutputPaths& outputs) {
    Corpus corpus = load_corpus(input, format);
    AnalysisResult result = analyze_corpus(corpus, cfg);
    if (outputs.spectrum_csv) write_file(*outputs.spectrum_csv, emit_spectrum_csv(result.spectrum));
    if (outputs.report_md) write_file(*outputs.report_md, emit_report_md(result.report));
    if (outputs.plot_svg) write_file(*outputs.plot_svg, emit_plot_svg(result.spectrum, result.peaks));
    return result.report;
}

}  // namespace rpys
