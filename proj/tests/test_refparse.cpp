#include <doctest.h>

#include <string>

#include "rpys/refparse.hpp"
#include "rpys/rng.hpp"

using namespace rpys;

namespace {

constexpr int kMaxYear = 2026;

struct GrammarCase {
    const char* raw;
    ParseStatus status;
    const char* author;  // nullptr = absent
    int year;            // 0 = absent
    const char* source;  // nullptr = absent
    int volume;          // 0 = absent
    int page;            // 0 = absent
    const char* doi;     // nullptr = absent
};

// One row per grammar rule worth pinning down; statuses cover Parsed, NoYear
// and Malformed, fields cover author/source presence, volume/page/DOI
// extraction, and the [1500, max_year] year window.
const GrammarCase kGrammar[] = {
    {"LACK D, 1947, DARWINS FINCHES", ParseStatus::Parsed, "LACK D", 1947, "DARWINS FINCHES", 0,
     0, nullptr},
    {"DARWIN C, 1859, ORIGIN SPECIES, P1", ParseStatus::Parsed, "DARWIN C", 1859,
     "ORIGIN SPECIES", 0, 1, nullptr},
    {"DARWIN C, 1859, ORIGIN SPECIES, V1, P1", ParseStatus::Parsed, "DARWIN C", 1859,
     "ORIGIN SPECIES", 1, 1, nullptr},
    {"ANONYMOUS, IN PRESS, SOME J", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"GOULD J, 0185, ZOOL NOTES", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"DOBZHANSKY T, 1937, GENETICS ORIGIN SPECIES, DOI 10.1234/abc", ParseStatus::Parsed,
     "DOBZHANSKY T", 1937, "GENETICS ORIGIN SPECIES", 0, 0, "10.1234/abc"},
    {"SMITH J, 2200, FUTURE WORKS", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"SMITH J, 2026, CURRENT SURVEY", ParseStatus::Parsed, "SMITH J", 2026, "CURRENT SURVEY", 0,
     0, nullptr},
    {"SMITH J, 2027, NEXT YEARBOOK", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"SMITH J, 1500, OLD TRACT", ParseStatus::Parsed, "SMITH J", 1500, "OLD TRACT", 0, 0,
     nullptr},
    {"SMITH J, 1499, OLDER TRACT", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"1947, DARWINS FINCHES", ParseStatus::Parsed, nullptr, 1947, "DARWINS FINCHES", 0, 0,
     nullptr},
    {"LACK D, 1947", ParseStatus::Parsed, "LACK D", 1947, nullptr, 0, 0, nullptr},
    {"1947", ParseStatus::Malformed, nullptr, 1947, nullptr, 0, 0, nullptr},
    {", 1947, ", ParseStatus::Malformed, nullptr, 1947, nullptr, 0, 0, nullptr},
    {"LACK D, 1947, DARWINS FINCHES, V12, P271, DOI 10.1038/161046a0", ParseStatus::Parsed,
     "LACK D", 1947, "DARWINS FINCHES", 12, 271, "10.1038/161046a0"},
    {"LACK D, 1947, DARWINS FINCHES, P271, V12", ParseStatus::Parsed, "LACK D", 1947,
     "DARWINS FINCHES", 12, 271, nullptr},
    {"lack d., 1947, darwins finches", ParseStatus::Parsed, "LACK D", 1947, "DARWINS FINCHES",
     0, 0, nullptr},
    {"  Lack   D. , 1947,  Darwins  Finches ", ParseStatus::Parsed, "LACK D", 1947,
     "DARWINS FINCHES", 0, 0, nullptr},
    {"GRANT P R, 1986, ECOLOGY EVOLUTION GALAPAGOS FINCHES", ParseStatus::Parsed, "GRANT P R",
     1986, "ECOLOGY EVOLUTION GALAPAGOS FINCHES", 0, 0, nullptr},
    {"V12, P34", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"DARWIN C, 1859, ORIGIN SPECIES, VIII", ParseStatus::Parsed, "DARWIN C", 1859,
     "ORIGIN SPECIES", 0, 0, nullptr},
    {"DARWIN C, 1859, ORIGIN SPECIES, V, P", ParseStatus::Parsed, "DARWIN C", 1859,
     "ORIGIN SPECIES", 0, 0, nullptr},
    {"DARWIN C, 1859, 1871, DESCENT MAN", ParseStatus::Parsed, "DARWIN C", 1859, "1871", 0, 0,
     nullptr},
    {"DARWIN C, 18599, ORIGIN", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"WALLACE A R, 1858 , TENDENCY VARIETIES", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0,
     nullptr},
    {"DOI 10.1086/280906", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
    {"HUXLEY T H, 1863, EVIDENCE MANS PLACE NATURE, DOI", ParseStatus::Parsed, "HUXLEY T H",
     1863, "EVIDENCE MANS PLACE NATURE", 0, 0, nullptr},
    {"HUXLEY T H, 1863, EVIDENCE MANS PLACE NATURE, DOI   ", ParseStatus::Parsed, "HUXLEY T H",
     1863, "EVIDENCE MANS PLACE NATURE", 0, 0, nullptr},
    {"MAYR E, 1942, SYSTEMATICS ORIGIN SPECIES, V2, V3", ParseStatus::Parsed, "MAYR E", 1942,
     "SYSTEMATICS ORIGIN SPECIES", 2, 0, nullptr},
    {"A, 1900, B, DOI X, DOI Y", ParseStatus::Parsed, "A", 1900, "B", 0, 0, "X"},
    {"SMITH\tJONES, 1900, ANNUAL REV", ParseStatus::Parsed, "SMITH JONES", 1900, "ANNUAL REV",
     0, 0, nullptr},
    {"1947 LACK D, 1948, FINCH NOTES", ParseStatus::Parsed, "1947 LACK D", 1948, "FINCH NOTES",
     0, 0, nullptr},
    {"NO SEPARATOR,1947,USED", ParseStatus::NoYear, nullptr, 0, nullptr, 0, 0, nullptr},
};

}  // namespace

TEST_CASE("grammar table") {
    for (const GrammarCase& c : kGrammar) {
        CAPTURE(c.raw);
        CitedReference ref = parse_reference(c.raw, kMaxYear);
        CHECK(ref.raw == c.raw);
        CHECK(ref.status == c.status);
        if (c.author) {
            CHECK(ref.author_norm == c.author);
        } else {
            CHECK(!ref.author_norm.has_value());
        }
        if (c.year) {
            CHECK(ref.year == c.year);
        } else {
            CHECK(!ref.year.has_value());
        }
        if (c.source) {
            CHECK(ref.source_norm == c.source);
        } else {
            CHECK(!ref.source_norm.has_value());
        }
        if (c.volume) {
            CHECK(ref.volume == c.volume);
        } else {
            CHECK(!ref.volume.has_value());
        }
        if (c.page) {
            CHECK(ref.page == c.page);
        } else {
            CHECK(!ref.page.has_value());
        }
        if (c.doi) {
            CHECK(ref.doi == c.doi);
        } else {
            CHECK(!ref.doi.has_value());
        }
    }
}

TEST_CASE("grammar table covers 30+ cases and all statuses") {
    std::size_t parsed = 0;
    std::size_t no_year = 0;
    std::size_t malformed = 0;
    for (const GrammarCase& c : kGrammar) {
        if (c.status == ParseStatus::Parsed) ++parsed;
        if (c.status == ParseStatus::NoYear) ++no_year;
        if (c.status == ParseStatus::Malformed) ++malformed;
    }
    CHECK(parsed + no_year + malformed >= 30);
    CHECK(parsed > 0);
    CHECK(no_year > 0);
    CHECK(malformed > 0);
}

TEST_CASE("parse_reference never yields a year outside [1500, max_year]") {
    for (const GrammarCase& c : kGrammar) {
        CitedReference ref = parse_reference(c.raw, kMaxYear);
        if (ref.year) {
            CHECK(*ref.year >= 1500);
            CHECK(*ref.year <= kMaxYear);
        }
        if (ref.status == ParseStatus::NoYear) CHECK(!ref.year.has_value());
        if (ref.status == ParseStatus::Parsed) {
            CHECK(ref.year.has_value());
            CHECK((ref.author_norm.has_value() || ref.source_norm.has_value()));
        }
    }
}

TEST_CASE("identical raw strings parse identically") {
    for (const GrammarCase& c : kGrammar) {
        CHECK(parse_reference(c.raw, kMaxYear) == parse_reference(c.raw, kMaxYear));
    }
}

TEST_CASE("normalize rules") {
    CHECK(normalize("Lack  D.") == "LACK D");
    CHECK(normalize("") == "");
    CHECK(normalize("DARWINS FINCHES") == "DARWINS FINCHES");
    CHECK(normalize("  a .b.  c  ") == "A B C");
    CHECK(normalize(" . . ") == "");
    CHECK(normalize("x\t\ny") == "X Y");
}

TEST_CASE("normalize is idempotent on random strings") {
    SplitMix64 rng(7);
    const char alphabet[] = "aAzZ09 .\t,()-";
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s;
        const auto len = rng.below(24);
        for (std::uint64_t i = 0; i < len; ++i) {
            s += alphabet[rng.below(sizeof(alphabet) - 1)];
        }
        const std::string once = normalize(s);
        CHECK(normalize(once) == once);
    }
}

TEST_CASE("default max reference year is next year") {
    const int y = default_max_reference_year();
    CHECK(y >= 2026);
    CHECK(y <= 2200);
}

TEST_CASE("parse_all preserves cardinality and order") {
    Corpus corpus;
    corpus.records.push_back({"R1", 1990,
                              {"LACK D, 1947, DARWINS FINCHES", "NOT A REFERENCE",
                               "DARWIN C, 1859, ORIGIN SPECIES"},
                              {}});
    corpus.records.push_back({"R2", 1991, {"1947", "GOULD J, 0185, ZOOL NOTES"}, {}});

    ParsedRefs out = parse_all(corpus, kMaxYear);
    REQUIRE(out.refs.size() == 5);
    CHECK(out.refs[0].first == "R1");
    CHECK(out.refs[0].second.raw == "LACK D, 1947, DARWINS FINCHES");
    CHECK(out.refs[3].first == "R2");
    CHECK(out.refs[3].second.raw == "1947");
    CHECK(out.tally.parsed == 2);
    CHECK(out.tally.no_year == 2);
    CHECK(out.tally.malformed == 1);
    CHECK(out.tally.total() == 5);
}

TEST_CASE("all-unparseable corpus tallies no Parsed entries") {
    Corpus corpus;
    corpus.records.push_back({"R1", 1990, {"IN PRESS", "FORTHCOMING, SOON", "1947"}, {}});
    ParsedRefs out = parse_all(corpus, kMaxYear);
    CHECK(out.tally.parsed == 0);
    CHECK(out.tally.no_year + out.tally.malformed == 3);
}
