#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rpys/corpus.hpp"
#include "rpys/errors.hpp"

namespace rpys {

enum class CorpusFormat {
    FieldTagged,  // "wos" on the command line
    JsonLines,    // "jsonl"
};

/// Parse a corpus in the field-tagged export format.
///
/// Grammar: optional "FN"/"VR" header lines, then records delimited by a
/// "PT " start line and a line exactly "ER". Field lines are two uppercase
/// letters, a space, and the value; continuation lines start with exactly
/// three spaces. Recognized tags: PT (ignored), UT (record id, fallback
/// "REC<ordinal>"), PY (publication year), CR (one cited reference per
/// physical line). The file may end with a line exactly "EF".
///
/// Throws MalformedRecord, InvalidYear, DuplicateId.
Corpus parse_field_tagged(std::string_view text, std::string source_path = "<memory>");

/// Parse a corpus in JSON-lines format: one object per line with keys
/// "id" (string), "year" (integer), "cited_references" (array of strings).
/// Unknown keys are preserved in extra_fields under tag "JX".
///
/// Throws MalformedRecord, InvalidYear, DuplicateId.
Corpus parse_jsonl(std::string_view text, std::string source_path = "<memory>");

Corpus parse_corpus(std::string_view text, CorpusFormat format,
                    std::string source_path = "<memory>");

/// Read a corpus file from disk. Throws Error when the file cannot be read,
/// plus anything the format parser throws.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

}  // namespace rpys
