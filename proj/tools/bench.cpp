// Benchmarks the parallel kernels against their single-threaded reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "claf/embedder.hpp"
#include "claf/retrieval.hpp"
#include "claf/scale.hpp"
#include "claf/toy_lm.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool equal) {
    std::cout << std::left << std::setw(26) << name << std::right << std::fixed
              << std::setprecision(4) << std::setw(10) << serial_s << " s"
              << std::setw(10) << parallel_s << " s   speedup " << std::setprecision(2)
              << std::setw(5) << (parallel_s > 0 ? serial_s / parallel_s : 0.0)
              << "   results " << (equal ? "identical" : "DIFFER") << '\n';
}

claf::kg::KnowledgeGraph synthetic_graph(int entities) {
    std::vector<claf::kg::Entity> entity_list;
    entity_list.reserve(static_cast<std::size_t>(entities));
    for (int i = 0; i < entities; ++i) {
        claf::kg::Entity entity;
        entity.name = "entity " + std::to_string(i);
        entity.entity_type = "concept";
        entity.description = "description of concept number " + std::to_string(i) +
                             (i % 7 == 0 ? " about energy and light" : " about matter");
        entity.level = i % 3;
        entity_list.push_back(std::move(entity));
    }
    std::vector<claf::kg::Relation> relations;
    for (int i = 0; i + 3 < entities; i += 3) {
        claf::kg::Relation relation;
        relation.source = "entity " + std::to_string(i);
        relation.target = "entity " + std::to_string(i + 3);
        relation.description = "related";
        relation.strength = 5.0;
        relation.level = i % 3;
        relations.push_back(std::move(relation));
    }
    return claf::kg::build_graph(entity_list, relations);
}

bool same_ranking(const std::vector<claf::retrieval::ScoredEntity>& a,
                  const std::vector<claf::retrieval::ScoredEntity>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].entity.name != b[i].entity.name || a[i].score != b[i].score) {
            return false;
        }
    }
    return true;
}

void bench_scoring(int entities, int iterations) {
    const auto graph = synthetic_graph(entities);
    const std::vector<std::string> terms = {"energy", "light", "concept"};

    auto start = Clock::now();
    std::vector<claf::retrieval::ScoredEntity> serial;
    for (int i = 0; i < iterations; ++i) {
        serial = claf::retrieval::score_neighbors_serial(terms, graph);
    }
    const double serial_s = seconds_since(start);

    start = Clock::now();
    std::vector<claf::retrieval::ScoredEntity> parallel;
    for (int i = 0; i < iterations; ++i) {
        parallel = claf::retrieval::score_neighbors(terms, graph);
    }
    const double parallel_s = seconds_since(start);

    report("entity scoring", serial_s, parallel_s, same_ranking(serial, parallel));
}

void bench_lm(int iterations) {
    const auto& scorer = claf::lm::ToyBigramScorer::demo();
    const int vocab = static_cast<int>(scorer.vocab().size());

    auto start = Clock::now();
    std::vector<double> serial;
    for (int i = 0; i < iterations; ++i) {
        serial = scorer.scores_serial(i % vocab);
    }
    const double serial_s = seconds_since(start);

    start = Clock::now();
    std::vector<double> parallel;
    for (int i = 0; i < iterations; ++i) {
        parallel = scorer.scores(i % vocab);
    }
    const double parallel_s = seconds_since(start);

    report("bigram scoring", serial_s, parallel_s, serial == parallel);
}

void bench_coherence(int records) {
    std::vector<claf::scale::ScaleRecord> data;
    data.reserve(static_cast<std::size_t>(records));
    for (int i = 0; i < records; ++i) {
        claf::scale::ScaleRecord record;
        record.id = "bench-" + std::to_string(i);
        record.category = "science";
        record.question = "why does sample " + std::to_string(i) + " behave this way";
        record.response_basic = "the sun gives light and the light warms the air";
        record.response_intermediate =
            "sunlight carries energy that warms the air around us";
        record.response_advanced =
            "solar radiation transfers energy into the atmosphere and warms it";
        data.push_back(std::move(record));
    }
    const claf::embed::HashedBowEmbedder embedder;

    auto start = Clock::now();
    std::vector<claf::scale::CoherenceReport> serial;
    serial.reserve(data.size());
    for (const auto& record : data) {
        serial.push_back(claf::scale::verify_triple(record, embedder, 0.1));
    }
    const double serial_s = seconds_since(start);

    start = Clock::now();
    const auto parallel = claf::scale::verify_records(data, embedder, 0.1);
    const double parallel_s = seconds_since(start);

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
        equal = serial[i].record_id == parallel[i].record_id &&
                serial[i].sim_basic_intermediate == parallel[i].sim_basic_intermediate &&
                serial[i].sim_intermediate_advanced ==
                    parallel[i].sim_intermediate_advanced &&
                serial[i].sim_basic_advanced == parallel[i].sim_basic_advanced &&
                serial[i].pass == parallel[i].pass;
    }
    report("coherence batch", serial_s, parallel_s, equal);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel kernel benchmark"};
    int entities = 20000;
    int lm_iterations = 20000;
    int scoring_iterations = 20;
    int records = 5000;
    app.add_option("--entities", entities, "graph size for entity scoring");
    app.add_option("--scoring-iters", scoring_iterations, "entity scoring repetitions");
    app.add_option("--lm-iters", lm_iterations, "bigram scoring repetitions");
    app.add_option("--records", records, "records for the coherence batch");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "built without openmp; both columns are single-threaded\n\n";
#endif

    try {
        bench_scoring(entities, scoring_iterations);
        bench_lm(lm_iterations);
        bench_coherence(records);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
