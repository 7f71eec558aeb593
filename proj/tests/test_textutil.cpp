#include "doctest.h"

#include "claf/textutil.hpp"

using namespace claf;

TEST_SUITE("textutil") {

TEST_CASE("trim strips surrounding whitespace only") {
    CHECK(text::trim("  hello world \t\n") == "hello world");
    CHECK(text::trim("") == "");
    CHECK(text::trim(" \t ") == "");
    CHECK(text::trim("x") == "x");
}

TEST_CASE("fold lowercases ascii and leaves the rest alone") {
    CHECK(text::fold("MiXeD 42!") == "mixed 42!");
    CHECK(text::fold_char('Q') == 'q');
    CHECK(text::fold_char('7') == '7');
}

TEST_CASE("lower_word_tokens splits on non-alphanumerics") {
    const auto tokens = text::lower_word_tokens("The sun, gives LIGHT!");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0] == "the");
    CHECK(tokens[1] == "sun");
    CHECK(tokens[2] == "gives");
    CHECK(tokens[3] == "light");
}

TEST_CASE("word_tokens keeps case and byte spans") {
    const auto tokens = text::word_tokens("Sky is blue.");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].value == "Sky");
    CHECK(tokens[0].begin == 0);
    CHECK(tokens[0].end == 3);
    CHECK(tokens[2].value == "blue");
    CHECK(tokens[2].begin == 7);
    CHECK(tokens[2].end == 11);
}

TEST_CASE("word_tokens glues internal apostrophes") {
    const auto tokens = text::word_tokens("don't stop");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].value == "don't");
    CHECK(tokens[1].value == "stop");
}

TEST_CASE("contains_word respects word boundaries") {
    CHECK(text::contains_word("the carbon cycle", "carbon"));
    CHECK(text::contains_word("Carbon Dioxide", "carbon dioxide"));
    CHECK_FALSE(text::contains_word("carbonate rocks", "carbon"));
    CHECK_FALSE(text::contains_word("any text", ""));
}

TEST_CASE("split on a multi-character delimiter") {
    const auto parts = text::split("a<|>b<|><|>c", "<|>");
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == "a");
    CHECK(parts[1] == "b");
    CHECK(parts[2] == "");
    CHECK(parts[3] == "c");
}

TEST_CASE("ascii_dominant ignores whitespace and trips on mostly non-ascii") {
    CHECK(text::ascii_dominant("plain text"));
    CHECK(text::ascii_dominant(""));
    CHECK_FALSE(text::ascii_dominant("\xE6\x97\xA5\xE6\x9C\xAC\xE8\xAA\x9E"));
}

} // TEST_SUITE
