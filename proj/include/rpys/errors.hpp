#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rpys {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A corpus record violates the input grammar (missing terminator, missing
/// required field, unparseable line).
class MalformedRecord : public Error {
public:
    MalformedRecord(std::size_t line, const std::string& detail)
        : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A record's publication year is not an integer in [1500, 2100].
class InvalidYear : public Error {
public:
    InvalidYear(std::size_t line, const std::string& detail)
        : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Two records in one corpus carry the same id.
class DuplicateId : public Error {
public:
    explicit DuplicateId(const std::string& record_id)
        : Error("duplicate record id \"" + record_id + "\""), record_id_(record_id) {}

    const std::string& record_id() const noexcept { return record_id_; }

private:
    std::string record_id_;
};

/// Analysis was asked to run on a corpus with no records.
class EmptyCorpus : public Error {
public:
    EmptyCorpus() : Error("corpus contains no records") {}
};

/// No cited reference falls inside the configured year range.
class EmptyRange : public Error {
public:
    EmptyRange(int min_year, int max_year)
        : Error("no cited references fall in " + std::to_string(min_year) + "-" +
                std::to_string(max_year)) {}
};

/// A fixture spec demands more citations than the record count can carry
/// under per-record deduplication.
class SpecOverflow : public Error {
public:
    using Error::Error;
};

/// Peak attribution found no clusters at a detected peak year; signals an
/// internal detection/attribution inconsistency.
class NoClustersAtYear : public Error {
public:
    explicit NoClustersAtYear(int year)
        : Error("no work clusters at peak year " + std::to_string(year)), year_(year) {}

    int year() const noexcept { return year_; }

private:
    int year_;
};

}  // namespace rpys
