#include "doctest.h"

#include "claf/error.hpp"
#include "claf/extraction.hpp"

using namespace claf;

namespace {

const char* kSample =
    "(\"entity\"<|>Photosynthesis<|>process<|>plants make food from light<|>Intermediate level)##\n"
    "(\"entity\"<|>Sun<|>celestial body<|>the sun gives light<|>Basic level)##\n"
    "(\"relationship\"<|>Sun<|>Photosynthesis<|>sunlight powers photosynthesis<|>sun,light<|>8<|>Intermediate level)##\n"
    "(\"content_keywords\"<|>sun,photosynthesis,light)##\n"
    "<|COMPLETE|>\n"
    "trailing garbage that must be ignored";

} // namespace

TEST_SUITE("extraction") {

TEST_CASE("well-formed records parse into entities, relations and keywords") {
    const auto result = kg::parse_extraction_output(kSample);
    CHECK(result.issues.empty());
    REQUIRE(result.entities.size() == 2);
    CHECK(result.entities[0].name == "Photosynthesis");
    CHECK(result.entities[0].entity_type == "process");
    CHECK(result.entities[0].level == kg::kLevelIntermediate);
    CHECK(result.entities[1].level == kg::kLevelBasic);
    REQUIRE(result.relations.size() == 1);
    CHECK(result.relations[0].source == "Sun");
    CHECK(result.relations[0].target == "Photosynthesis");
    CHECK(result.relations[0].strength == 8.0);
    REQUIRE(result.relations[0].keywords.size() == 2);
    CHECK(result.relations[0].keywords[1] == "light");
    REQUIRE(result.content_keywords.size() == 3);
    CHECK(result.content_keywords[2] == "light");
}

TEST_CASE("malformed records become issues and parsing continues") {
    const std::string raw =
        "(\"entity\"<|>OnlyThreeFields<|>oops)##"
        "(\"mystery\"<|>a<|>b)##"
        "no parentheses at all##"
        "(\"entity\"<|>Good<|>thing<|>a valid record<|>Basic level)";
    const auto result = kg::parse_extraction_output(raw);
    REQUIRE(result.entities.size() == 1);
    CHECK(result.entities[0].name == "Good");
    REQUIRE(result.issues.size() == 3);
    CHECK(result.issues[0].record_index == 0);
    CHECK(result.issues[0].code == ErrorCode::MalformedRecord);
    CHECK(result.issues[1].record_index == 1);
    CHECK(result.issues[2].record_index == 2);
}

TEST_CASE("bad level phrases and bad strengths are rejected per record") {
    const std::string raw =
        "(\"entity\"<|>Thing<|>t<|>d<|>Galactic level)##"
        "(\"relationship\"<|>A<|>B<|>d<|>k<|>eleven<|>Basic level)##"
        "(\"relationship\"<|>A<|>B<|>d<|>k<|>11<|>Basic level)##"
        "(\"relationship\"<|>A<|>A<|>d<|>k<|>5<|>Basic level)";
    const auto result = kg::parse_extraction_output(raw);
    CHECK(result.entities.empty());
    CHECK(result.relations.empty());
    REQUIRE(result.issues.size() == 4);
    CHECK(result.issues[0].code == ErrorCode::UnknownLevel);
    CHECK(result.issues[1].code == ErrorCode::MalformedRecord);
    CHECK(result.issues[2].code == ErrorCode::MalformedRecord);
    CHECK(result.issues[3].code == ErrorCode::MalformedRecord);
}

TEST_CASE("delimiters must be non-empty and pairwise distinct") {
    kg::ExtractionDelimiters delims;
    CHECK_NOTHROW(delims.validate());
    delims.record_delimiter = "";
    CHECK_THROWS_AS(delims.validate(), ClafError);
    delims.record_delimiter = "<|>";
    CHECK_THROWS_AS(delims.validate(), ClafError);
}

TEST_CASE("custom delimiters are honored") {
    kg::ExtractionDelimiters delims;
    delims.tuple_open = "[";
    delims.tuple_close = "]";
    delims.field_delimiter = "|";
    delims.record_delimiter = ";;";
    delims.completion_delimiter = "DONE";
    const auto result = kg::parse_extraction_output(
        "[\"entity\"|Moon|rock|orbits the earth|Basic level];;DONE", delims);
    CHECK(result.issues.empty());
    REQUIRE(result.entities.size() == 1);
    CHECK(result.entities[0].name == "Moon");
}

} // TEST_SUITE
