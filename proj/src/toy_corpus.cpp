#include "claf/toy_lm.hpp"

namespace claf::lm {

// Hand-written mini corpus. Plain declarative science sentences so the bigram
// table contains useful continuations for the entities that show up in the
// demo knowledge graphs.
const std::vector<std::string>& ToyBigramScorer::demo_corpus() {
    static const std::vector<std::string> kCorpus = {
        "the sun gives light and heat",
        "the sun is a star",
        "light from the sun warms the air",
        "plants use light to make food",
        "plants need water and light",
        "plants make food from water and air",
        "photosynthesis turns light into energy",
        "photosynthesis happens inside green plants",
        "photosynthesis needs water light and air",
        "energy from light powers photosynthesis",
        "energy moves from the sun to plants",
        "water falls as rain from the sky",
        "water flows down because of gravity",
        "water vapor rises into the sky",
        "gravity pulls objects toward the earth",
        "gravity holds the moon near the earth",
        "gravity makes rain fall down",
        "the sky looks blue in the day",
        "blue light scatters more than red light",
        "air scatters blue light across the sky",
        "the sky is blue because air scatters light",
        "air is a mix of gases",
        "warm air rises above cold air",
        "a cell is the smallest unit of life",
        "every cell needs energy to live",
        "the cell uses energy from food",
        "green plants have cells with chlorophyll",
        "density is mass divided by volume",
        "a stone has a higher density than water",
        "buoyancy pushes a boat up in water",
        "buoyancy depends on the density of water",
        "objects with low density float on water",
        "ice floats because its density is low",
        "heat makes water turn into vapor",
        "clouds form when vapor cools in the sky",
        "rain gives plants the water they need",
        "the moon moves around the earth",
        "the earth moves around the sun",
        "food gives the body energy",
        "light travels faster than sound",
    };
    return kCorpus;
}

} // namespace claf::lm
