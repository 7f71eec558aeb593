#include "doctest.h"

#include "claf/error.hpp"
#include "claf/kcg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

using namespace claf;
using kcg::KcgConfig;

namespace {

kg::KnowledgeGraph demo_graph() {
    kg::Entity sun{"Sun", "star", "gives light and warmth", 0};
    kg::Entity light{"Light", "phenomenon", "travels from the sun", 0};
    kg::Relation r;
    r.source = "Sun";
    r.target = "Light";
    r.description = "emits";
    r.strength = 8.0;
    return kg::build_graph({sun, light}, {r});
}

int count_tokens_in(const std::vector<std::string>& tokens,
                    const std::vector<std::string>& wanted) {
    int n = 0;
    for (const auto& token : tokens)
        if (std::find(wanted.begin(), wanted.end(), token) != wanted.end()) ++n;
    return n;
}

} // namespace

TEST_SUITE("kcg") {

TEST_CASE("config knobs are range-checked") {
    CHECK_NOTHROW(KcgConfig{}.validate());

    KcgConfig c;
    c.weight_ceiling = 0.0;
    CHECK_THROWS_AS(c.validate(), ClafError);
    c.weight_ceiling = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(c.validate(), ClafError);

    c = KcgConfig{};
    c.alignment_threshold = 1.1;
    CHECK_THROWS_AS(c.validate(), ClafError);
    c.alignment_threshold = -0.1;
    CHECK_THROWS_AS(c.validate(), ClafError);

    c = KcgConfig{};
    c.reset_threshold = c.alignment_threshold; // must be strictly above
    CHECK_THROWS_AS(c.validate(), ClafError);
    c.reset_threshold = 1.5;
    CHECK_THROWS_AS(c.validate(), ClafError);

    c = KcgConfig{};
    c.ema_alpha = 0.0;
    CHECK_THROWS_AS(c.validate(), ClafError);
    c.ema_alpha = 1.0;
    CHECK_NOTHROW(c.validate());

    c = KcgConfig{};
    c.filter_floor = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(c.validate(), ClafError);
}

TEST_CASE("the logistic function is stable, symmetric and monotone") {
    CHECK(kcg::sigmoid(0.0) == 0.5);
    CHECK(kcg::sigmoid(0.4) == doctest::Approx(0.598687660112452).epsilon(1e-12));
    CHECK(kcg::sigmoid(1000.0) == 1.0);  // no overflow
    CHECK(kcg::sigmoid(-1000.0) == 0.0); // no underflow surprises
    for (double x : {0.1, 0.7, 3.0, 25.0}) {
        CHECK(kcg::sigmoid(x) + kcg::sigmoid(-x) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(kcg::sigmoid(x) > kcg::sigmoid(x - 0.05));
    }
}

TEST_CASE("weight updates follow the closed form and stay inside (0, ceiling)") {
    KcgConfig config;
    config.weight_ceiling = 2.0;
    config.alignment_threshold = 0.5;

    for (double alignment : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        for (double signal : {0.0, 0.3, 1.0, 4.0}) {
            const double expected =
                config.weight_ceiling *
                kcg::sigmoid(-(config.alignment_threshold - alignment) * signal);
            const double w = kcg::update_weight(alignment, signal, config);
            CHECK(w == doctest::Approx(expected).epsilon(1e-15));
            CHECK(w > 0.0);
            CHECK(w < config.weight_ceiling);
        }
    }

    // At the threshold, or with no signal, the weight is exactly half the ceiling.
    CHECK(kcg::update_weight(0.5, 3.7, config) == 1.0);
    CHECK(kcg::update_weight(0.23, 0.0, config) == 1.0);

    // Above-threshold alignment grows the weight; below shrinks it.
    CHECK(kcg::update_weight(0.9, 1.0, config) > 1.0);
    CHECK(kcg::update_weight(0.1, 1.0, config) < 1.0);
}

TEST_CASE("controller construction checks its centers") {
    KcgConfig config;
    kcg::ControlCenter empty_center{"hollow", {}, 1.0, 0.0};
    CHECK_THROWS_AS(kcg::KcgController(config, {empty_center}, 10), ClafError);

    kcg::ControlCenter bad_id{"keyword", {12}, 1.0, 0.0};
    CHECK_THROWS_AS(kcg::KcgController(config, {bad_id}, 10), ClafError);

    kcg::ControlCenter good{"keyword", {0, 9}, 1.0, 0.0};
    CHECK_NOTHROW(kcg::KcgController(config, {good}, 10));
}

TEST_CASE("a step adds each center's fresh weight onto its covered ids") {
    KcgConfig config; // ceiling 2, threshold 0.5, alpha 0.1
    kcg::ControlCenter center{"kw", {1}, 1.0, 0.0};
    kcg::KcgController controller(config, {center}, 3);

    const std::vector<double> base = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(controller.step(0, 0.0, {1.0, 2.0}), ClafError);

    // Non-covered token, signal 0: alignment stays 0, weight is exactly half
    // the ceiling, and only index 1 moves.
    const auto adjusted = controller.step(0, 0.0, base);
    CHECK(adjusted[0] == 1.0);
    CHECK(adjusted[1] == 2.0 + 1.0);
    CHECK(adjusted[2] == 3.0);
    CHECK(controller.centers()[0].cumulative_alignment == 0.0);
    CHECK(controller.centers()[0].weight == 1.0);
    CHECK(controller.step_count() == 1);
}

TEST_CASE("generating a covered token counts as full alignment") {
    KcgConfig config;
    kcg::KcgController controller(config, {{"kw", {1}, 1.0, 0.0}}, 2);

    controller.step(1, 0.0, {0.0, 0.0}); // hit: observed alignment is 1.0
    CHECK(controller.centers()[0].cumulative_alignment ==
          doctest::Approx(0.1).epsilon(1e-15)); // 0.9 * 0 + 0.1 * 1
}

TEST_CASE("external signals are clamped into [0, 1] for the monitor") {
    KcgConfig config;
    config.ema_alpha = 1.0; // the monitor copies the observation directly
    // The reset check is strictly greater-than, so a ceiling of 1.0 keeps a
    // fully saturated monitor observable instead of snapping it back.
    config.reset_threshold = 1.0;

    kcg::KcgController over(config, {{"kw", {0}, 1.0, 0.0}}, 1);
    over.step(-1, 7.5, {0.0});
    CHECK(over.centers()[0].cumulative_alignment == 1.0);

    kcg::KcgController under(config, {{"kw", {0}, 1.0, 0.0}}, 1);
    under.step(-1, -3.0, {0.0});
    CHECK(under.centers()[0].cumulative_alignment == 0.0);

    kcg::KcgController mid(config, {{"kw", {0}, 1.0, 0.0}}, 1);
    mid.step(-1, 0.7, {0.0});
    CHECK(mid.centers()[0].cumulative_alignment == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("saturated centers snap back to the neutral point") {
    KcgConfig config; // reset threshold 0.9
    config.ema_alpha = 0.5;
    kcg::KcgController controller(config, {{"kw", {0}, 1.0, 0.0}}, 1);

    // Repeated hits walk the average 0.5, 0.75, 0.875, 0.9375; only the last
    // crosses 0.9 and triggers the reset.
    for (int i = 0; i < 3; ++i) {
        controller.step(0, 1.0, {0.0});
        CHECK(controller.centers()[0].cumulative_alignment <= config.reset_threshold);
    }
    controller.step(0, 1.0, {0.0});
    CHECK(controller.centers()[0].cumulative_alignment == config.alignment_threshold);
    CHECK(controller.centers()[0].weight == config.weight_ceiling / 2.0);
}

TEST_CASE("overlapping centers stack their weights") {
    KcgConfig config;
    kcg::KcgController controller(
        config, {{"a", {0}, 0.0, 0.0}, {"b", {0, 1}, 0.0, 0.0}}, 2);
    const auto adjusted = controller.step(-1, 0.0, {0.0, 0.0});
    // Both centers sit at the neutral weight of 1.0 after the update.
    CHECK(adjusted[0] == 2.0);
    CHECK(adjusted[1] == 1.0);
}

TEST_CASE("controller initialization maps keywords onto the vocabulary") {
    const std::vector<std::string> vocab = {"light", "photosynthesis", "scattering",
                                            "sun", "the"};
    KcgConfig config;
    const auto init = kcg::init_controller(
        {"light", "Photosynthesis", "light scattering", "the sun", "zzz", "   "},
        vocab, config);

    REQUIRE(init.controller.centers().size() == 4);
    CHECK(init.skipped_keywords == std::vector<std::string>{"zzz", "   "});

    const auto& centers = init.controller.centers();
    CHECK(centers[0].keyword == "light");
    CHECK(centers[0].token_ids == std::vector<int>{0});
    CHECK(centers[1].keyword == "Photosynthesis"); // fold-insensitive exact match
    CHECK(centers[1].token_ids == std::vector<int>{1});
    CHECK(centers[2].keyword == "light scattering"); // covers both content words
    CHECK(centers[2].token_ids == std::vector<int>{0, 2});
    // "the" is a stopword, so the multi-word keyword covers only "sun".
    CHECK(centers[3].keyword == "the sun");
    CHECK(centers[3].token_ids == std::vector<int>{3});

    for (const auto& center : centers) {
        CHECK(center.weight == config.weight_ceiling / 2.0);
        CHECK(center.cumulative_alignment == 0.0);
    }

    CHECK_THROWS_AS(kcg::init_controller({"light"}, {}, config), ClafError);
}

TEST_CASE("a single-word stopword keyword still matches exactly") {
    KcgConfig config;
    const auto init = kcg::init_controller({"the"}, {"sun", "the"}, config);
    REQUIRE(init.controller.centers().size() == 1);
    CHECK(init.controller.centers()[0].token_ids == std::vector<int>{1});
}

TEST_CASE("the candidate filter keeps scores at or above the floor") {
    KcgConfig config; // floor is -infinity by default
    CHECK(kcg::filter_candidates({1.0, 2.0, 3.0}, config) == std::vector<int>{0, 1, 2});

    config.filter_floor = 2.0;
    CHECK(kcg::filter_candidates({1.0, 2.0, 3.0}, config) == std::vector<int>{1, 2});

    // A floor above everything falls back to the single best candidate.
    config.filter_floor = 10.0;
    CHECK(kcg::filter_candidates({1.0, 2.0, 3.0}, config) == std::vector<int>{2});
    CHECK(kcg::filter_candidates({5.0, 5.0}, config) == std::vector<int>{0});

    CHECK_THROWS_AS(kcg::filter_candidates({}, config), ClafError);
}

TEST_CASE("the decoding demo emits as many tokens as requested") {
    const kg::KnowledgeGraph graph = demo_graph();
    retrieval::RetrievalRequest request;
    request.query = "sun light";
    request.level = 0;

    KcgConfig config;
    const auto result = kcg::generate_demo(graph, request, "why is the sky blue", 5, config);
    CHECK(result.tokens.size() == 5);
    CHECK(result.trace.size() == 5);
    CHECK(result.keywords == std::vector<std::string>{"Light", "Sun"});
    CHECK(result.skipped_keywords.empty());
    for (const auto& step : result.trace) {
        CHECK(step.token_id >= 0);
        CHECK(step.centers.size() == 2);
    }

    CHECK_THROWS_AS(kcg::generate_demo(graph, request, "prompt", 0, config), ClafError);
}

TEST_CASE("the demo is deterministic for identical inputs") {
    const kg::KnowledgeGraph graph = demo_graph();
    retrieval::RetrievalRequest request;
    request.query = "sun light";
    request.level = 0;

    KcgConfig config;
    const auto a = kcg::generate_demo(graph, request, "the sun", 20, config);
    const auto b = kcg::generate_demo(graph, request, "the sun", 20, config);
    CHECK(a.tokens == b.tokens);
}

TEST_CASE("stronger steering makes keyword tokens at least as frequent") {
    const kg::KnowledgeGraph graph = demo_graph();
    retrieval::RetrievalRequest request;
    request.query = "sun light";
    request.level = 0;

    KcgConfig weak;
    weak.weight_ceiling = 1e-12; // steering vanishes
    KcgConfig strong;
    strong.weight_ceiling = 6.0;

    const auto weak_run = kcg::generate_demo(graph, request, "water", 30, weak);
    const auto strong_run = kcg::generate_demo(graph, request, "water", 30, strong);

    const std::vector<std::string> wanted = {"sun", "light"};
    const int weak_hits = count_tokens_in(weak_run.tokens, wanted);
    const int strong_hits = count_tokens_in(strong_run.tokens, wanted);
    CHECK(strong_hits >= weak_hits);
    CHECK(strong_hits > 0);
}

} // TEST_SUITE
