#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rpys/analysis.hpp"
#include "rpys/fixture.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitUsage = 4;

bool color_enabled() {
    return isatty(fileno(stdout)) != 0 && std::getenv("RPYS_NO_COLOR") == nullptr;
}

std::string bold(const std::string& s) {
    return color_enabled() ? "\033[1m" + s + "\033[0m" : s;
}

rpys::CorpusFormat parse_format(const std::string& name) {
    return name == "wos" ? rpys::CorpusFormat::FieldTagged : rpys::CorpusFormat::JsonLines;
}

struct AnalyzeArgs {
    std::string input;
    std::string format;
    int min_year = 1800;
    int max_year = 1960;
    int window = 5;
    int min_peak_count = 10;
    std::string deviation = "signed";
    bool count_multiplicity = false;
    int fuzzy_threshold = 0;
    int top_k = 5;
    std::string out_spectrum;
    std::string out_report;
    std::string out_plot;
};

struct FixtureArgs {
    std::string spec_path;
    bool use_default = false;
    std::string format = "wos";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
};

void print_summary(const rpys::RunReport& report) {
    const auto& cfg = report.config;
    std::cout << "records          " << report.records << "\n";
    std::cout << "raw references   " << report.raw_references << " (parsed "
              << report.tally.parsed << ", no year " << report.tally.no_year << ", malformed "
              << report.tally.malformed << ")\n";
    std::cout << "in range         " << report.in_range_total << " (" << cfg.min_year << "-"
              << cfg.max_year << ")\n";
    if (report.peaks.empty()) {
        std::cout << "peaks            none\n";
        return;
    }
    std::cout << "peaks            " << report.peaks.size() << "\n";
    for (const rpys::Peak& p : report.peaks) {
        const int top = p.top_clusters.empty() ? 0 : p.top_clusters.front().count;
        const std::string work =
            p.top_clusters.empty() ? "-" : p.top_clusters.front().canonical_key.display();
        char share[32];
        std::snprintf(share, sizeof(share), "%.3f", p.top_share);
        std::cout << "  " << bold(std::to_string(p.year)) << "  count " << p.count << "  dev "
                  << rpys::format_real(p.deviation) << "  " << work << "  " << top << "/"
                  << p.count << " (" << share << ")\n";
    }
}

int run_analyze(const AnalyzeArgs& args) {
    rpys::AnalysisConfig cfg;
    cfg.min_year = args.min_year;
    cfg.max_year = args.max_year;
    cfg.window_halfwidth = args.window == 0 ? 0 : (args.window - 1) / 2;
    cfg.min_peak_count = args.min_peak_count;
    cfg.deviation_mode = args.deviation == "absolute" ? rpys::DeviationMode::Absolute
                                                      : rpys::DeviationMode::Signed;
    cfg.count_multiplicity = args.count_multiplicity;
    cfg.fuzzy_threshold = args.fuzzy_threshold;
    cfg.top_k = args.top_k;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "rpys: error: " << e.what() << "\n";
        return kExitUsage;
    }

    rpys::OutputPaths outputs;
    if (!args.out_spectrum.empty()) outputs.spectrum_csv = args.out_spectrum;
    if (!args.out_report.empty()) outputs.report_md = args.out_report;
    if (!args.out_plot.empty()) outputs.plot_svg = args.out_plot;

    try {
        rpys::RunReport report =
            rpys::run_analysis(args.input, parse_format(args.format), cfg, outputs);
        print_summary(report);
        return kExitOk;
    } catch (const rpys::EmptyCorpus& e) {
        std::cerr << "rpys: error: " << args.input << ": " << e.what() << "\n";
        return kExitEmpty;
    } catch (const rpys::EmptyRange& e) {
        std::cerr << "rpys: error: " << args.input << ": " << e.what() << "\n";
        return kExitEmpty;
    } catch (const rpys::MalformedRecord& e) {
        std::cerr << "rpys: error: " << args.input << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const rpys::InvalidYear& e) {
        std::cerr << "rpys: error: " << args.input << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const rpys::DuplicateId& e) {
        std::cerr << "rpys: error: " << args.input << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const rpys::Error& e) {
        std::cerr << "rpys: error: " << e.what() << "\n";
        return kExitInput;
    }
}

int run_fixture(const FixtureArgs& args) {
    if (args.use_default == !args.spec_path.empty()) {
        std::cerr << "rpys: error: give exactly one of --spec or --default\n";
        return kExitUsage;
    }

    rpys::FixtureSpec spec;
    try {
        if (args.use_default) {
            spec = rpys::FixtureSpec::darwin_finches();
        } else {
            std::ifstream in(args.spec_path, std::ios::binary);
            if (!in) {
                std::cerr << "rpys: error: cannot open spec file: " << args.spec_path << "\n";
                return kExitInput;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            spec = rpys::parse_fixture_spec(buf.str());
        }
        if (args.seed_given) spec.seed = args.seed;

        const std::string bytes = rpys::generate_fixture(spec, parse_format(args.format));
        std::ofstream out(args.out, std::ios::binary);
        out << bytes;
        if (!out) {
            std::cerr << "rpys: error: cannot write " << args.out << "\n";
            return kExitInput;
        }
        std::cout << "wrote " << spec.n_records << " records to " << args.out << " ("
                  << args.format << ")\n";
        return kExitOk;
    } catch (const rpys::Error& e) {
        std::cerr << "rpys: error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rpys: error: fixture spec: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reference publication year spectroscopy over citation corpora"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze a corpus file");
    analyze->add_option("--input", analyze_args.input, "Corpus file path")->required();
    analyze->add_option("--format", analyze_args.format, "Corpus file format")
        ->required()
        ->check(CLI::IsMember({"wos", "jsonl"}));
    analyze->add_option("--min-year", analyze_args.min_year, "First spectrum year");
    analyze->add_option("--max-year", analyze_args.max_year, "Last spectrum year");
    analyze
        ->add_option("--window", analyze_args.window,
                     "Full width of the median window in years (odd, or 0 to disable)")
        ->check([](const std::string& v) -> std::string {
            int n = 0;
            try {
                n = std::stoi(v);
            } catch (const std::exception&) {
                return "not an integer";
            }
            if (n < 0 || (n != 0 && n % 2 == 0)) return "window must be odd or 0";
            return {};
        });
    analyze->add_option("--min-peak-count", analyze_args.min_peak_count,
                        "Minimum count for a year to qualify as a peak");
    analyze->add_option("--deviation", analyze_args.deviation, "Deviation series mode")
        ->check(CLI::IsMember({"signed", "absolute"}));
    analyze->add_flag("--count-multiplicity", analyze_args.count_multiplicity,
                      "Count reference occurrences instead of distinct citing records");
    analyze->add_option("--fuzzy-threshold", analyze_args.fuzzy_threshold,
                        "Edit-distance threshold for merging source variants");
    analyze->add_option("--top-k", analyze_args.top_k, "Works listed per peak");
    analyze->add_option("--out-spectrum", analyze_args.out_spectrum, "Write spectrum CSV here");
    analyze->add_option("--out-report", analyze_args.out_report, "Write Markdown report here");
    analyze->add_option("--out-plot", analyze_args.out_plot, "Write SVG plot here");

    FixtureArgs fixture_args;
    CLI::App* fixture = app.add_subcommand("fixture", "Generate a synthetic corpus");
    CLI::Option* spec_opt =
        fixture->add_option("--spec", fixture_args.spec_path, "Fixture spec JSON file");
    fixture->add_flag("--default", fixture_args.use_default, "Use the bundled default spec")
        ->excludes(spec_opt);
    fixture->add_option("--format", fixture_args.format, "Output corpus format")
        ->check(CLI::IsMember({"wos", "jsonl"}));
    CLI::Option* seed_opt =
        fixture->add_option("--seed", fixture_args.seed, "Override the spec's RNG seed");
    fixture->add_option("--out", fixture_args.out, "Output file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    fixture_args.seed_given = seed_opt->count() > 0;
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
    return run_fixture(fixture_args);
}
