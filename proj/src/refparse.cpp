#include "rpys/refparse.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <ctime>

namespace rpys {

namespace {

std::vector<std::string_view> split_segments(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto sep = s.find(", ", pos);
        if (sep == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, sep - pos));
        pos = sep + 2;
    }
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!is_digit(c)) return false;
    }
    return true;
}

std::optional<int> four_digit_year(std::string_view seg, int max_year) {
    if (seg.size() != 4 || !all_digits(seg)) return std::nullopt;
    int y = 0;
    std::from_chars(seg.data(), seg.data() + 4, y);
    if (y < kMinReferenceYear || y > max_year) return std::nullopt;
    return y;
}

// V<digits> or P<digits>, wholly.
std::optional<int> tagged_number(std::string_view seg, char tag) {
    if (seg.size() < 2 || seg[0] != tag || !all_digits(seg.substr(1))) return std::nullopt;
    int v = 0;
    auto [ptr, ec] = std::from_chars(seg.data() + 1, seg.data() + seg.size(), v);
    if (ec != std::errc{} || ptr != seg.data() + seg.size()) return std::nullopt;
    return v;
}

std::string_view trim_ws(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::optional<std::string> normalized_or_absent(std::string_view s) {
    auto n = normalize(s);
    if (n.empty()) return std::nullopt;
    return n;
}

}  // namespace

std::string normalize(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (c == '.') continue;
        if (c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r') {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        out.push_back(c);
    }
    return out;
}

int default_max_reference_year() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    return utc.tm_year + 1900 + 1;
}

CitedReference parse_reference(std::string_view raw, int max_year) {
    CitedReference ref;
    ref.raw = std::string(raw);

    auto segments = split_segments(raw);
    std::size_t year_idx = segments.size();
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (auto y = four_digit_year(segments[i], max_year)) {
            ref.year = *y;
            year_idx = i;
            break;
        }
    }
    if (year_idx == segments.size()) {
        ref.status = ParseStatus::NoYear;
        return ref;
    }

    if (year_idx > 0) ref.author_norm = normalized_or_absent(segments[0]);
    if (year_idx + 1 < segments.size()) {
        ref.source_norm = normalized_or_absent(segments[year_idx + 1]);
    }
    for (std::size_t i = year_idx + 2; i < segments.size(); ++i) {
        std::string_view seg = segments[i];
        if (!ref.volume) {
            if (auto v = tagged_number(seg, 'V')) {
                ref.volume = *v;
                continue;
            }
        }
        if (!ref.page) {
            if (auto p = tagged_number(seg, 'P')) {
                ref.page = *p;
                continue;
            }
        }
        if (!ref.doi && seg.substr(0, 4) == "DOI ") {
            auto value = trim_ws(seg.substr(4));
            if (!value.empty()) ref.doi = std::string(value);
        }
    }

    ref.status = (ref.author_norm || ref.source_norm) ? ParseStatus::Parsed
                                                      : ParseStatus::Malformed;
    return ref;
}

ParsedRefs parse_all(const Corpus& corpus, int max_year) {
    ParsedRefs out;
    for (const auto& record : corpus.records) {
        for (const auto& raw : record.raw_references) {
            auto ref = parse_reference(raw, max_year);
            switch (ref.status) {
                case ParseStatus::Parsed: ++out.tally.parsed; break;
                case ParseStatus::NoYear: ++out.tally.no_year; break;
                case ParseStatus::Malformed: ++out.tally.malformed; break;
            }
            out.refs.emplace_back(record.record_id, std::move(ref));
        }
    }
    return out;
}

}  // namespace rpys
