#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpys/corpus.hpp"

namespace rpys {

// Reference years below this are treated as erroneous and yield NoYear.
constexpr int kMinReferenceYear = 1500;

enum class ParseStatus {
    Parsed,     // year found; at least one of author/source present
    NoYear,     // no segment qualifies as a publication year
    Malformed,  // year found but neither author nor source
};

/// One parsed cited-reference string.
struct CitedReference {
    std::string raw;
    std::optional<std::string> author_norm;
    std::optional<int> year;
    std::optional<std::string> source_norm;
    std::optional<int> volume;
    std::optional<int> page;
    std::optional<std::string> doi;
    ParseStatus status = ParseStatus::Malformed;

    friend bool operator==(const CitedReference&, const CitedReference&) = default;
};

/// Uppercase ASCII letters, strip periods, collapse whitespace runs to one
/// space, trim. Idempotent.
std::string normalize(std::string_view s);

/// Current UTC year + 1; the default upper bound for reference years.
int default_max_reference_year();

/// Parse one raw reference string against the fixed grammar: segments split
/// on ", "; the year is the first segment of exactly four digits within
/// [1500, max_year]; the first pre-year segment is the author and the first
/// post-year segment the source; later segments may carry V<digits>,
/// P<digits>, or "DOI <value>". Never throws; dirty input degrades to
/// NoYear or Malformed.
CitedReference parse_reference(std::string_view raw, int max_year);

struct RefTally {
    std::size_t parsed = 0;
    std::size_t no_year = 0;
    std::size_t malformed = 0;

    std::size_t total() const { return parsed + no_year + malformed; }

    friend bool operator==(const RefTally&, const RefTally&) = default;
};

struct ParsedRefs {
    // (record_id, parsed reference) pairs in (record order, within-record order).
    std::vector<std::pair<std::string, CitedReference>> refs;
    RefTally tally;
};

/// Parse every raw reference in the corpus. One output pair per raw string.
ParsedRefs parse_all(const Corpus& corpus, int max_year);

}  // namespace rpys
