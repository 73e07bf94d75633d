#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rpys/corpus.hpp"
#include "rpys/errors.hpp"
#include "rpys/ingest.hpp"

namespace rpys {

/// One engineered peak year: a dominant work plus a remainder spread over
/// n_other_works secondary works.
struct StratumSpec {
    int year = 0;
    int top_work_count = 0;
    int other_count = 0;
    int n_other_works = 0;
};

struct YearCount {
    int year = 0;
    int count = 0;
};

struct FixtureSpec {
    int n_records = 689;
    int min_year = 1800;
    int max_year = 1960;
    std::vector<StratumSpec> strata;
    std::vector<YearCount> background;
    int modern_refs_per_record = 2;  // post-range references per record, for realism
    std::uint64_t seed = 42;

    /// The bundled default: four strata (1859, 1871, 1937, 1947) over a flat
    /// background that brings the in-range citation total to exactly 1961
    /// across 689 records.
    static FixtureSpec darwin_finches();
};

/// Background series over the non-stratum years of [spec.min_year,
/// spec.max_year] bringing the in-range total to in_range_total. The series
/// is non-decreasing with a flat tail, which guarantees non-positive
/// deviations everywhere outside the strata, hence no spurious peaks.
std::vector<YearCount> background_filling_to(const FixtureSpec& spec, int in_range_total);

/// Parse a fixture spec from JSON. Unknown keys are rejected. "background"
/// may be given explicitly or via "in_range_total" (auto-filled); omitting
/// both yields no background.
FixtureSpec parse_fixture_spec(std::string_view json_text);

/// Deterministically generate the corpus described by the spec. Citation
/// counts are exact by construction; the seed only drives which records cite
/// which works and the reference order inside each record.
/// Throws SpecOverflow when a single work needs more citing records than
/// n_records provides.
Corpus generate_fixture_corpus(const FixtureSpec& spec);

/// Serialize a corpus to file bytes in the chosen format.
std::string emit_corpus(const Corpus& corpus, CorpusFormat format);

/// generate + emit.
std::string generate_fixture(const FixtureSpec& spec, CorpusFormat format);

}  // namespace rpys
