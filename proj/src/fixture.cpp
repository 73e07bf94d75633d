#include "rpys/fixture.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "rpys/rng.hpp"

namespace rpys {

namespace {

// Naturalistic author tokens for synthetic works.
constexpr std::array<const char*, 10> kAuthorPool = {
    "GOULD J",     "GRANT P R",    "BOAG P T",  "SCHLUTER D", "ABBOTT I",
    "BOWMAN R I",  "SNODGRASS R E", "ROTHSCHILD W", "SWARTH H S", "SALVIN O",
};

std::string pool_author(std::size_t i) {
    std::string author = kAuthorPool[i % kAuthorPool.size()];
    if (i >= kAuthorPool.size()) author += " " + std::to_string(i / kAuthorPool.size());
    return author;
}

std::string top_work_reference(int year) {
    switch (year) {
        case 1859: return "DARWIN C, 1859, ORIGIN SPECIES";
        case 1871: return "DARWIN C, 1871, DESCENT MAN";
        case 1937: return "DOBZHANSKY T, 1937, GENETICS ORIGIN SPECIES";
        case 1947: return "LACK D, 1947, DARWINS FINCHES";
        default:
            return "KEYSTONE A, " + std::to_string(year) + ", FOUNDATIONAL STUD " +
                   std::to_string(year);
    }
}

std::string other_work_reference(int year, std::size_t j) {
    std::string ref = pool_author(j) + ", " + std::to_string(year) + ", EVOLUTION STUD " +
                      std::to_string(j + 1);
    // A little volume/page texture so the full grammar gets exercised.
    if (j % 3 == 1) ref += ", V" + std::to_string(j + 2);
    if (j % 3 == 2) ref += ", P" + std::to_string(101 + 7 * j);
    return ref;
}

std::string background_work_reference(int year) {
    return pool_author(static_cast<std::size_t>(year) % kAuthorPool.size()) + ", " +
           std::to_string(year) + ", NAT HIST SURV " + std::to_string(year);
}

std::string modern_work_reference(int year, std::size_t i) {
    return pool_author(i) + ", " + std::to_string(year) + ", MODERN SYNTH REV " +
           std::to_string(i + 1);
}

struct Work {
    std::string reference;
    int copies = 0;
};

// c_w distinct record indices via partial Fisher-Yates.
std::vector<std::size_t> sample_records(std::size_t n_records, std::size_t k,
                                        SplitMix64& rng, std::vector<std::size_t>& scratch) {
    scratch.resize(n_records);
    std::iota(scratch.begin(), scratch.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n_records - i));
        std::swap(scratch[i], scratch[j]);
    }
    return {scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k)};
}

void validate_spec(const FixtureSpec& spec) {
    if (spec.n_records < 0) throw std::invalid_argument("n_records must be >= 0");
    if (spec.min_year > spec.max_year) {
        throw std::invalid_argument("fixture min_year must be <= max_year");
    }
    if (spec.modern_refs_per_record < 0) {
        throw std::invalid_argument("modern_refs_per_record must be >= 0");
    }
    for (const auto& s : spec.strata) {
        if (s.top_work_count < 0 || s.other_count < 0 || s.n_other_works < 0) {
            throw std::invalid_argument("stratum counts must be >= 0");
        }
        if (s.year < spec.min_year || s.year > spec.max_year) {
            throw std::invalid_argument("stratum year " + std::to_string(s.year) +
                                        " outside fixture year range");
        }
        if (s.other_count > 0 && s.n_other_works == 0) {
            throw std::invalid_argument("stratum has other_count > 0 but no other works");
        }
    }
    for (const auto& b : spec.background) {
        if (b.count < 0) throw std::invalid_argument("background counts must be >= 0");
        if (b.year < spec.min_year || b.year > spec.max_year) {
            throw std::invalid_argument("background year " + std::to_string(b.year) +
                                        " outside fixture year range");
        }
    }
}

}  // namespace

std::vector<YearCount> background_filling_to(const FixtureSpec& spec, int in_range_total) {
    int stratum_total = 0;
    std::set<int> stratum_years;
    for (const auto& s : spec.strata) {
        stratum_total += s.top_work_count + s.other_count;
        stratum_years.insert(s.year);
    }
    const int needed = in_range_total - stratum_total;
    if (needed < 0) {
        throw SpecOverflow("strata already exceed the requested in-range total");
    }
    std::vector<int> years;
    for (int y = spec.min_year; y <= spec.max_year; ++y) {
        if (!stratum_years.contains(y)) years.push_back(y);
    }
    if (years.empty() && needed > 0) {
        throw SpecOverflow("no non-stratum years available for background citations");
    }
    std::vector<YearCount> out;
    if (years.empty()) return out;
    // Two-level non-decreasing fill: early years get the floor, later years
    // one more. Monotone counts with a flat tail keep every background
    // deviation non-positive, so the fill can never add a peak.
    const int n = static_cast<int>(years.size());
    const int base = needed / n;
    const int extra = needed % n;
    for (int i = 0; i < n; ++i) {
        out.push_back({years[static_cast<std::size_t>(i)], base + (i >= n - extra ? 1 : 0)});
    }
    return out;
}

FixtureSpec FixtureSpec::darwin_finches() {
    FixtureSpec spec;
    spec.strata = {
        {1859, 53, 1, 1},
        {1871, 21, 3, 3},
        {1937, 22, 19, 10},
        {1947, 144, 17, 8},
    };
    spec.background = background_filling_to(spec, 1961);
    return spec;
}

FixtureSpec parse_fixture_spec(std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) throw Error("fixture spec: invalid JSON object");

    static const std::set<std::string> known = {
        "n_records", "min_year",  "max_year",       "seed",
        "strata",    "background", "in_range_total", "modern_refs_per_record",
    };
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) throw Error("fixture spec: unknown key \"" + key + "\"");
    }
    if (j.contains("background") && j.contains("in_range_total")) {
        throw Error("fixture spec: give either \"background\" or \"in_range_total\", not both");
    }

    try {
        FixtureSpec spec;
        spec.strata.clear();
        spec.background.clear();
        if (j.contains("n_records")) spec.n_records = j["n_records"].get<int>();
        if (j.contains("min_year")) spec.min_year = j["min_year"].get<int>();
        if (j.contains("max_year")) spec.max_year = j["max_year"].get<int>();
        if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("modern_refs_per_record")) {
            spec.modern_refs_per_record = j["modern_refs_per_record"].get<int>();
        }
        if (j.contains("strata")) {
            for (const auto& s : j["strata"]) {
                spec.strata.push_back({s.at("year").get<int>(),
                                       s.at("top_work_count").get<int>(),
                                       s.at("other_count").get<int>(),
                                       s.at("n_other_works").get<int>()});
            }
        }
        if (j.contains("background")) {
            for (const auto& b : j["background"]) {
                spec.background.push_back({b.at("year").get<int>(), b.at("count").get<int>()});
            }
        } else if (j.contains("in_range_total")) {
            spec.background = background_filling_to(spec, j["in_range_total"].get<int>());
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("fixture spec: ") + e.what());
    }
}

Corpus generate_fixture_corpus(const FixtureSpec& spec) {
    validate_spec(spec);

    std::vector<Work> works;
    for (const auto& s : spec.strata) {
        if (s.top_work_count > 0) works.push_back({top_work_reference(s.year), s.top_work_count});
        if (s.n_other_works > 0) {
            const int base = s.other_count / s.n_other_works;
            const int extra = s.other_count % s.n_other_works;
            for (int joined = 0; joined < s.n_other_works; ++joined) {
                const int copies = base + (joined < extra ? 1 : 0);
                if (copies > 0) {
                    works.push_back(
                        {other_work_reference(s.year, static_cast<std::size_t>(joined)), copies});
                }
            }
        }
    }
    for (const auto& b : spec.background) {
        if (b.count > 0) works.push_back({background_work_reference(b.year), b.count});
    }
    for (const auto& w : works) {
        if (w.copies > spec.n_records) {
            throw SpecOverflow("work \"" + w.reference + "\" needs " +
                               std::to_string(w.copies) + " distinct citing records but only " +
                               std::to_string(spec.n_records) + " exist");
        }
    }

    SplitMix64 rng(spec.seed);
    const auto n = static_cast<std::size_t>(spec.n_records);

    Corpus corpus;
    corpus.source_path = "<fixture>";
    corpus.records.resize(n);
    std::size_t id_width = std::max<std::size_t>(4, std::to_string(spec.n_records).size());
    for (std::size_t i = 0; i < n; ++i) {
        std::string ordinal = std::to_string(i + 1);
        corpus.records[i].record_id =
            "R" + std::string(id_width - ordinal.size(), '0') + ordinal;
        corpus.records[i].publication_year = 1974 + static_cast<int>(rng.below(39));
    }

    std::vector<std::size_t> scratch;
    for (const auto& work : works) {
        for (std::size_t r :
             sample_records(n, static_cast<std::size_t>(work.copies), rng, scratch)) {
            corpus.records[r].raw_references.push_back(work.reference);
        }
    }

    if (spec.modern_refs_per_record > 0 && n > 0) {
        constexpr std::size_t kModernWorks = 30;
        std::vector<std::string> modern;
        for (std::size_t i = 0; i < kModernWorks; ++i) {
            modern.push_back(modern_work_reference(spec.max_year + 5 + static_cast<int>(i), i));
        }
        const auto per_record =
            std::min<std::size_t>(static_cast<std::size_t>(spec.modern_refs_per_record),
                                  kModernWorks);
        std::vector<std::size_t> pick;
        for (auto& record : corpus.records) {
            pick.clear();
            while (pick.size() < per_record) {
                std::size_t w = static_cast<std::size_t>(rng.below(kModernWorks));
                if (std::find(pick.begin(), pick.end(), w) == pick.end()) pick.push_back(w);
            }
            for (std::size_t w : pick) record.raw_references.push_back(modern[w]);
        }
    }

    for (auto& record : corpus.records) {
        auto& refs = record.raw_references;
        for (std::size_t i = refs.size(); i > 1; --i) {
            std::swap(refs[i - 1], refs[static_cast<std::size_t>(rng.below(i))]);
        }
    }
    return corpus;
}

std::string emit_corpus(const Corpus& corpus, CorpusFormat format) {
    std::string out;
    if (format == CorpusFormat::FieldTagged) {
        out += "FN RPYS Corpus Export\nVR 1.0\n";
        for (const auto& record : corpus.records) {
            out += "\nPT J\n";
            out += "UT " + record.record_id + "\n";
            out += "PY " + std::to_string(record.publication_year) + "\n";
            for (std::size_t i = 0; i < record.raw_references.size(); ++i) {
                out += (i == 0 ? "CR " : "   ") + record.raw_references[i] + "\n";
            }
            out += "ER\n";
        }
        out += "\nEF\n";
    } else {
        for (const auto& record : corpus.records) {
            nlohmann::json j;
            j["id"] = record.record_id;
            j["year"] = record.publication_year;
            j["cited_references"] = record.raw_references;
            out += j.dump();
            out += '\n';
        }
    }
    return out;
}

std::string generate_fixture(const FixtureSpec& spec, CorpusFormat format) {
    return emit_corpus(generate_fixture_corpus(spec), format);
}

}  // namespace rpys
