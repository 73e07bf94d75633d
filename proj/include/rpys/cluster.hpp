#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpys/refparse.hpp"

namespace rpys {

/// Identity proxy for one cited work. Absent author/source fields map to
/// empty strings so every Parsed reference has a key.
struct WorkKey {
    std::string author_norm;
    int year = 0;
    std::string source_norm;

    // Field order gives the lexicographic (author, year, source) ordering
    // used for canonical keys and merge order.
    auto operator<=>(const WorkKey&) const = default;

    std::string display() const;
};

/// A group of cited-reference variants judged to denote the same work.
struct WorkCluster {
    WorkKey canonical_key;  // lexicographically smallest member key
    std::set<WorkKey> member_keys;
    std::set<std::string> citing_records;
    int occurrences = 0;  // raw mentions, before per-record dedup
    int count = 0;        // |citing_records|, or occurrences under multiplicity counting
};

std::size_t levenshtein(std::string_view a, std::string_view b);

/// Group Parsed references by exact WorkKey. A record contributes at most
/// once to a work's count unless count_multiplicity is set. Output is
/// sorted by canonical key, so it is independent of input order.
std::vector<WorkCluster> cluster_exact(
    std::span<const std::pair<std::string, CitedReference>> refs,
    bool count_multiplicity = false);

/// Iteratively merge clusters that share (author_norm, year) and whose
/// source_norm values are within the given edit distance. Merges are applied
/// in lexicographic canonical-key pair order until fixpoint; threshold 0 is
/// the identity.
std::vector<WorkCluster> cluster_fuzzy(std::vector<WorkCluster> clusters, int threshold,
                                       bool count_multiplicity = false);

}  // namespace rpys
