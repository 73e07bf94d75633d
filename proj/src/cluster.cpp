#include "rpys/cluster.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rpys {

std::string WorkKey::display() const {
    std::string out;
    if (!author_norm.empty()) out = author_norm + " ";
    out += "(" + std::to_string(year) + ")";
    if (!source_norm.empty()) out += " " + source_norm;
    return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    // b is the shorter string; two-row DP over its length.
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> curr(b.size() + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, subst});
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

namespace {

int cluster_count(const WorkCluster& c, bool count_multiplicity) {
    return count_multiplicity ? c.occurrences : static_cast<int>(c.citing_records.size());
}

WorkCluster merge(WorkCluster a, const WorkCluster& b, bool count_multiplicity) {
    a.member_keys.insert(b.member_keys.begin(), b.member_keys.end());
    a.citing_records.insert(b.citing_records.begin(), b.citing_records.end());
    a.occurrences += b.occurrences;
    a.canonical_key = *a.member_keys.begin();
    a.count = cluster_count(a, count_multiplicity);
    return a;
}

}  // namespace

std::vector<WorkCluster> cluster_exact(
    std::span<const std::pair<std::string, CitedReference>> refs, bool count_multiplicity) {
    std::map<WorkKey, WorkCluster> by_key;
    for (const auto& [record_id, ref] : refs) {
        if (ref.status != ParseStatus::Parsed) continue;
        WorkKey key{ref.author_norm.value_or(""), *ref.year, ref.source_norm.value_or("")};
        auto& cluster = by_key[key];
        if (cluster.member_keys.empty()) {
            cluster.canonical_key = key;
            cluster.member_keys.insert(key);
        }
        cluster.citing_records.insert(record_id);
        ++cluster.occurrences;
    }
    std::vector<WorkCluster> out;
    out.reserve(by_key.size());
    for (auto& [key, cluster] : by_key) {
        cluster.count = cluster_count(cluster, count_multiplicity);
        out.push_back(std::move(cluster));
    }
    return out;  // map order == canonical-key order
}

std::vector<WorkCluster> cluster_fuzzy(std::vector<WorkCluster> clusters, int threshold,
                                       bool count_multiplicity) {
    if (threshold <= 0) return clusters;

    // Merging requires equal (author, year), so work bucket by bucket.
    std::map<std::pair<std::string, int>, std::vector<WorkCluster>> buckets;
    for (auto& c : clusters) {
        auto key = std::make_pair(c.canonical_key.author_norm, c.canonical_key.year);
        buckets[key].push_back(std::move(c));
    }

    std::vector<WorkCluster> out;
    for (auto& [bucket_key, members] : buckets) {
        bool merged = true;
        while (merged && members.size() > 1) {
            std::sort(members.begin(), members.end(),
                      [](const WorkCluster& a, const WorkCluster& b) {
                          return a.canonical_key < b.canonical_key;
                      });
            merged = false;
            // First eligible pair in lexicographic canonical-key pair order.
            for (std::size_t i = 0; i < members.size() && !merged; ++i) {
                for (std::size_t j = i + 1; j < members.size() && !merged; ++j) {
                    auto dist = levenshtein(members[i].canonical_key.source_norm,
                                            members[j].canonical_key.source_norm);
                    if (dist <= static_cast<std::size_t>(threshold)) {
                        members[i] = merge(std::move(members[i]), members[j],
                                           count_multiplicity);
                        members.erase(members.begin() + static_cast<std::ptrdiff_t>(j));
                        merged = true;
                    }
                }
            }
        }
        for (auto& m : members) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const WorkCluster& a, const WorkCluster& b) {
        return a.canonical_key < b.canonical_key;
    });
    return out;
}

}  // namespace rpys
