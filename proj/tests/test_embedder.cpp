#include "doctest.h"

#include "claf/error.hpp"
#include "claf/embedder.hpp"
#include "claf/http_util.hpp"

#include <cmath>
#include <cstdlib>

using namespace claf;
using embed::HashedBowEmbedder;

namespace {

double norm(const std::vector<double>& v) {
    double total = 0.0;
    for (double x : v) total += x * x;
    return std::sqrt(total);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
    return total;
}

} // namespace

TEST_SUITE("embedder") {

TEST_CASE("the hash matches the published FNV-1a test vectors") {
    CHECK(embed::fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(embed::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(embed::fnv1a64("a") != embed::fnv1a64("b"));
}

TEST_CASE("embeddings are unit length and deterministic") {
    const HashedBowEmbedder embedder(64);
    CHECK(embedder.dimension() == 64);

    const auto once = embedder.embed({"the sun gives light", "water flows"});
    const auto again = embedder.embed({"the sun gives light", "water flows"});
    REQUIRE(once.size() == 2);
    CHECK(once == again);
    for (const auto& vec : once) {
        REQUIRE(vec.size() == 64);
        CHECK(norm(vec) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("word order does not change the embedding, word choice does") {
    const HashedBowEmbedder embedder;
    const auto vecs = embedder.embed({
        "the sun warms the air",
        "the air warms the sun",
        "the moon cools the rock",
    });
    CHECK(vecs[0] == vecs[1]); // same bag of words
    CHECK(dot(vecs[0], vecs[2]) < 0.999); // different content separates
    // Case is folded before hashing.
    const auto cased = embedder.embed({"Light Travels", "light travels"});
    CHECK(cased[0] == cased[1]);
}

TEST_CASE("a text without words maps to the zero vector") {
    const HashedBowEmbedder embedder(16);
    const auto vecs = embedder.embed({"", "?!?", "word"});
    CHECK(norm(vecs[0]) == 0.0);
    CHECK(norm(vecs[1]) == 0.0);
    CHECK(norm(vecs[2]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(embedder.embed({}).empty());
}

TEST_CASE("a zero-width embedder is rejected") {
    CHECK_THROWS_AS(HashedBowEmbedder(0), ClafError);
}

TEST_CASE("endpoints split into host base and request path") {
    const auto plain = net::split_endpoint("http://127.0.0.1:8900/embed");
    CHECK(plain.base == "http://127.0.0.1:8900");
    CHECK(plain.path == "/embed");

    const auto deep = net::split_endpoint("https://svc.local/v1/embeddings");
    CHECK(deep.base == "https://svc.local");
    CHECK(deep.path == "/v1/embeddings");

    const auto bare = net::split_endpoint("http://svc.local");
    CHECK(bare.path == "/");

    CHECK_THROWS_AS(net::split_endpoint("not a url"), ClafError);
}

TEST_CASE("the remote embedder requires its endpoint variable") {
    ::unsetenv("CLAF_EMBED_URL");
    CHECK_THROWS_AS(embed::HttpEmbedder::from_env(256), ClafError);

    ::setenv("CLAF_EMBED_URL", "http://127.0.0.1:1/embed", 1);
    CHECK_NOTHROW(embed::HttpEmbedder::from_env(256)); // construction does not connect
    ::unsetenv("CLAF_EMBED_URL");
}

} // TEST_SUITE
