#pragma once

#include <map>
#include <string>
#include <vector>

namespace rpys {

// Valid publication years for citing records.
constexpr int kMinRecordYear = 1500;
constexpr int kMaxRecordYear = 2100;

/// One publication in the analyzed corpus, with its raw cited-reference strings.
struct CitingRecord {
    std::string record_id;
    int publication_year = 0;
    std::vector<std::string> raw_references;
    // Pass-through two-character field tags; never consulted by the analysis.
    std::map<std::string, std::string> extra_fields;

    friend bool operator==(const CitingRecord&, const CitingRecord&) = default;
};

struct Corpus {
    std::vector<CitingRecord> records;
    std::string source_path;
};

}  // namespace rpys
