#include "rpys/ingest.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace rpys {

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

// Two uppercase ASCII letters, one space, value.
bool is_field_line(std::string_view line) {
    return line.size() >= 3 && is_upper(line[0]) && is_upper(line[1]) && line[2] == ' ';
}

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::optional<int> parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// Walks lines of a text buffer, stripping one trailing '\r' per line.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string_view& line) {
        if (pos_ >= text_.size()) return false;
        auto nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos) nl = text_.size();
        line = text_.substr(pos_, nl - pos_);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos_ = nl + 1;
        ++line_no_;
        return true;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

class FieldTaggedParser {
public:
    explicit FieldTaggedParser(std::string_view text) : reader_(text) {}

    Corpus run(std::string source_path) {
        Corpus corpus;
        corpus.source_path = std::move(source_path);
        std::string_view line;
        while (reader_.next(line)) {
            if (after_ef_) {
                if (!is_blank(line)) fail("content after EF");
                continue;
            }
            if (in_record_) {
                record_line(line, corpus);
            } else {
                between_records_line(line, corpus);
            }
        }
        if (in_record_) fail("record missing ER terminator");
        return corpus;
    }

private:
    [[noreturn]] void fail(const std::string& detail) {
        throw MalformedRecord(reader_.line_no(), detail);
    }

    void between_records_line(std::string_view line, Corpus& corpus) {
        if (is_blank(line)) return;
        if (line == "EF") {
            after_ef_ = true;
            return;
        }
        if (is_field_line(line)) {
            std::string_view tag = line.substr(0, 2);
            if (tag == "PT") {
                open_record();
                return;
            }
            if (corpus.records.empty() && ordinal_ == 0 && (tag == "FN" || tag == "VR")) {
                return;  // file header
            }
        }
        fail("content outside record");
    }

    void open_record() {
        in_record_ = true;
        ++ordinal_;
        ut_.reset();
        py_.reset();
        py_line_ = 0;
        refs_.clear();
        extra_.clear();
        last_tag_.clear();
    }

    void record_line(std::string_view line, Corpus& corpus) {
        if (line == "ER") {
            close_record(corpus);
            return;
        }
        if (line == "EF") fail("EF inside record (missing ER)");
        if (line.substr(0, 3) == "   ") {
            continuation(line.substr(3));
            return;
        }
        if (is_blank(line)) fail("blank line inside record");
        if (!is_field_line(line)) fail("unparseable line inside record");

        std::string tag(line.substr(0, 2));
        std::string_view value = line.substr(3);
        if (tag == "PT") fail("record missing ER terminator");
        last_tag_ = tag;
        if (tag == "CR") {
            push_reference(value);
        } else if (tag == "UT") {
            ut_ = std::string(trim(value));
        } else if (tag == "PY") {
            py_ = std::string(value);
            py_line_ = reader_.line_no();
        } else {
            append_extra(tag, value);
        }
    }

    void continuation(std::string_view rest) {
        if (last_tag_.empty()) fail("continuation line without a field");
        if (last_tag_ == "CR") {
            push_reference(rest);
        } else if (last_tag_ == "UT") {
            if (ut_) *ut_ += " " + std::string(trim(rest));
        } else if (last_tag_ == "PY") {
            if (py_) *py_ += " " + std::string(rest);
        } else if (last_tag_ != "PT") {
            append_extra(last_tag_, rest);
        }
    }

    void push_reference(std::string_view value) {
        if (!is_blank(value)) refs_.emplace_back(value);
    }

    void append_extra(const std::string& tag, std::string_view value) {
        auto [it, inserted] = extra_.try_emplace(tag, std::string(value));
        if (!inserted) {
            it->second += " ";
            it->second += value;
        }
    }

    void close_record(Corpus& corpus) {
        if (!py_) fail("record missing PY field");
        auto year = parse_int(*py_);
        if (!year) throw InvalidYear(py_line_, "PY is not an integer: \"" + *py_ + "\"");
        if (*year < kMinRecordYear || *year > kMaxRecordYear) {
            throw InvalidYear(py_line_, "PY out of range [1500, 2100]: " + *py_);
        }
        std::string id = (ut_ && !ut_->empty()) ? *ut_ : "REC" + std::to_string(ordinal_);
        if (!seen_ids_.insert(id).second) throw DuplicateId(id);

        CitingRecord rec;
        rec.record_id = std::move(id);
        rec.publication_year = *year;
        rec.raw_references = std::move(refs_);
        rec.extra_fields = std::move(extra_);
        corpus.records.push_back(std::move(rec));
        refs_.clear();
        extra_.clear();
        in_record_ = false;
    }

    LineReader reader_;
    bool in_record_ = false;
    bool after_ef_ = false;
    std::size_t ordinal_ = 0;
    std::optional<std::string> ut_;
    std::optional<std::string> py_;
    std::size_t py_line_ = 0;
    std::vector<std::string> refs_;
    std::map<std::string, std::string> extra_;
    std::string last_tag_;
    std::set<std::string> seen_ids_;
};

}  // namespace

Corpus parse_field_tagged(std::string_view text, std::string source_path) {
    return FieldTaggedParser(text).run(std::move(source_path));
}

Corpus parse_jsonl(std::string_view text, std::string source_path) {
    Corpus corpus;
    corpus.source_path = std::move(source_path);
    std::set<std::string> seen_ids;
    LineReader reader(text);
    std::string_view line;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        const std::size_t line_no = reader.line_no();
        nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded() || !j.is_object()) {
            throw MalformedRecord(line_no, "invalid JSON object");
        }
        if (!j.contains("id") || !j.contains("year") || !j.contains("cited_references")) {
            throw MalformedRecord(line_no, "missing one of: id, year, cited_references");
        }
        if (!j["id"].is_string() || j["id"].get<std::string>().empty()) {
            throw MalformedRecord(line_no, "\"id\" must be a non-empty string");
        }
        if (!j["year"].is_number_integer()) {
            throw InvalidYear(line_no, "\"year\" is not an integer");
        }
        const auto year = j["year"].get<std::int64_t>();
        if (year < kMinRecordYear || year > kMaxRecordYear) {
            throw InvalidYear(line_no,
                              "\"year\" out of range [1500, 2100]: " + std::to_string(year));
        }
        if (!j["cited_references"].is_array()) {
            throw MalformedRecord(line_no, "\"cited_references\" must be an array");
        }

        CitingRecord rec;
        rec.record_id = j["id"].get<std::string>();
        rec.publication_year = static_cast<int>(year);
        for (const auto& item : j["cited_references"]) {
            if (!item.is_string()) {
                throw MalformedRecord(line_no, "\"cited_references\" entries must be strings");
            }
            auto ref = item.get<std::string>();
            if (!is_blank(ref)) rec.raw_references.push_back(std::move(ref));
        }
        nlohmann::json extras = nlohmann::json::object();
        for (const auto& [key, value] : j.items()) {
            if (key != "id" && key != "year" && key != "cited_references") extras[key] = value;
        }
        if (!extras.empty()) rec.extra_fields["JX"] = extras.dump();

        if (!seen_ids.insert(rec.record_id).second) throw DuplicateId(rec.record_id);
        corpus.records.push_back(std::move(rec));
    }
    return corpus;
}

Corpus parse_corpus(std::string_view text, CorpusFormat format, std::string source_path) {
    return format == CorpusFormat::FieldTagged
               ? parse_field_tagged(text, std::move(source_path))
               : parse_jsonl(text, std::move(source_path));
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str(), format, path.string());
}

}  // namespace rpys
