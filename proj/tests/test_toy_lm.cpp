#include "doctest.h"

#include "claf/error.hpp"
#include "claf/toy_lm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace claf;
using lm::ToyBigramScorer;

TEST_SUITE("toy_lm") {

TEST_CASE("the vocabulary is the sorted set of lowercased words") {
    const ToyBigramScorer scorer({"The sun warms the air.", "Air rises."});
    CHECK(scorer.vocab() == std::vector<std::string>{"air", "rises", "sun", "the", "warms"});

    CHECK(scorer.token_id("sun") == 2);
    CHECK(scorer.token_id("SUN") == 2);
    CHECK(scorer.token_id(" sun ") == 2);
    CHECK(scorer.token_id("moon") == -1);
    CHECK(scorer.token_id("") == -1);
}

TEST_CASE("an empty corpus is rejected") {
    CHECK_THROWS_AS(ToyBigramScorer({}), ClafError);
    CHECK_THROWS_AS(ToyBigramScorer({"...", "!!"}), ClafError);
}

TEST_CASE("scores are smoothed log-probabilities that sum to one") {
    const ToyBigramScorer scorer({"the sun shines", "the sun warms", "the moon glows"});
    const int v = static_cast<int>(scorer.vocab().size());

    for (int prev = -1; prev < v; ++prev) {
        const auto row = scorer.scores(prev);
        REQUIRE(static_cast<int>(row.size()) == v);
        double total = 0.0;
        for (double logp : row) {
            CHECK(std::isfinite(logp));
            CHECK(logp < 0.0);
            total += std::exp(logp);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("observed continuations outscore unseen ones") {
    const ToyBigramScorer scorer({"the sun shines", "the sun warms", "the moon glows"});
    const int the_id = scorer.token_id("the");
    const int sun_id = scorer.token_id("sun");
    const int glows_id = scorer.token_id("glows");
    REQUIRE(the_id >= 0);

    const auto row = scorer.scores(the_id);
    // "the sun" appears twice, "the moon" once, "the glows" never.
    CHECK(row[static_cast<std::size_t>(sun_id)] >
          row[static_cast<std::size_t>(scorer.token_id("moon"))]);
    CHECK(row[static_cast<std::size_t>(scorer.token_id("moon"))] >
          row[static_cast<std::size_t>(glows_id)]);

    // Add-one smoothing: exact value for a seen bigram.
    // Context "the" occurs 3 times, "the sun" twice, vocabulary has 6 entries.
    CHECK(row[static_cast<std::size_t>(sun_id)] ==
          doctest::Approx(std::log(3.0 / 9.0)).epsilon(1e-15));

    // Sentence starts: each sentence begins with "the".
    const auto start = scorer.scores(-1);
    const auto best = std::max_element(start.begin(), start.end());
    CHECK(scorer.vocab()[static_cast<std::size_t>(best - start.begin())] == "the");
}

TEST_CASE("out-of-range contexts are rejected") {
    const ToyBigramScorer scorer({"one two"});
    CHECK_THROWS_AS(scorer.scores(-2), ClafError);
    CHECK_THROWS_AS(scorer.scores(99), ClafError);
    CHECK_NOTHROW(scorer.scores(-1));
}

TEST_CASE("parallel and serial scoring agree bit for bit") {
    const auto& scorer = ToyBigramScorer::demo();
    const int v = static_cast<int>(scorer.vocab().size());
    for (int prev = -1; prev < v; ++prev) {
        const auto parallel = scorer.scores(prev);
        const auto serial = scorer.scores_serial(prev);
        REQUIRE(parallel.size() == serial.size());
        for (std::size_t i = 0; i < parallel.size(); ++i) CHECK(parallel[i] == serial[i]);
    }
}

TEST_CASE("the embedded demo corpus supports the decoding demo") {
    const auto& scorer = ToyBigramScorer::demo();
    CHECK(scorer.vocab().size() > 30);
    for (const char* word : {"sun", "light", "water", "energy", "plants"})
        CHECK_MESSAGE(scorer.token_id(word) >= 0, word);
    // The singleton is built once.
    CHECK(&ToyBigramScorer::demo() == &ToyBigramScorer::demo());
}

} // TEST_SUITE
