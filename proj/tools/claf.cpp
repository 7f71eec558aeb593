// claf: command-line front end for the tiered knowledge / controllable
// decoding toolkit. One subcommand per pipeline stage; --json switches every
// subcommand to machine-readable output on stdout.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

#include "claf/error.hpp"
#include "claf/extraction.hpp"
#include "claf/graph.hpp"
#include "claf/graph_io.hpp"
#include "claf/grammar.hpp"
#include "claf/harness.hpp"
#include "claf/kcg.hpp"
#include "claf/readability.hpp"
#include "claf/retrieval.hpp"
#include "claf/scale.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
    bool json_output = false;
    long long seed = 0; // reserved for stochastic strategies; pipeline is deterministic
    std::string config_path;
    json config = json::object();
    bool config_loaded = false;
    int exit_code = 0;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw claf::ClafError(claf::ErrorCode::IoFailure, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void load_config(GlobalOptions& opts) {
    if (opts.config_loaded) return;
    opts.config_loaded = true;
    if (opts.config_path.empty()) return;
    const std::string raw = read_input(opts.config_path);
    json doc = json::parse(raw, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw claf::ClafError(claf::ErrorCode::InvalidConfig,
                              opts.config_path + " is not a JSON object");
    }
    opts.config = std::move(doc);
}

// CLI flag wins, then the config file, then the built-in default already in
// `value`.
template <typename T>
void apply_config(GlobalOptions& opts, const CLI::Option* flag,
                  const char* key, T& value) {
    load_config(opts);
    if (flag != nullptr && flag->count() > 0) return;
    if (!opts.config.contains(key)) return;
    try {
        value = opts.config.at(key).get<T>();
    } catch (const json::exception&) {
        throw claf::ClafError(claf::ErrorCode::InvalidConfig,
                              std::string("config key \"") + key +
                                  "\" has the wrong type");
    }
}

void emit(const GlobalOptions& opts, const json& doc,
          const std::string& human_text) {
    if (opts.json_output) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << human_text;
    }
}

json subset_to_json(const claf::retrieval::KnowledgeSubset& subset) {
    json entities = json::array();
    for (std::size_t i = 0; i < subset.entities.size(); ++i) {
        const auto& scored = subset.entities[i];
        entities.push_back({
            {"name", scored.entity.name},
            {"type", scored.entity.entity_type},
            {"description", scored.entity.description},
            {"level", scored.entity.level},
            {"score", scored.score},
            {"seed", i < subset.seed_count},
        });
    }
    return entities;
}

void register_build_graph(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand(
        "build-graph", "Parse structured extraction output and build a tiered graph");
    cmd->fallthrough();
    auto input = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "extraction output file, or - for stdin")
        ->required();
    cmd->add_option("--out", *out, "where to write the graph JSON");
    cmd->callback([&opts, input, out]() {
        const auto parsed = claf::kg::parse_extraction_output(read_input(*input));
        for (const auto& issue : parsed.issues) {
            std::cerr << "record " << issue.record_index << ": "
                      << claf::error_code_name(issue.code) << ": " << issue.message
                      << '\n';
        }
        const auto graph = claf::kg::build_graph(parsed.entities, parsed.relations);
        if (!out->empty()) {
            claf::kg::save_graph(graph, *out);
        } else if (!opts.json_output) {
            std::cout << claf::kg::graph_to_json(graph);
        }
        json summary = {
            {"entities", graph.entities.size()},
            {"intra_edges", graph.intra_edges.size()},
            {"crosslinks", graph.crosslinks.size()},
            {"content_keywords", parsed.content_keywords},
            {"skipped_records", parsed.issues.size()},
        };
        if (!out->empty()) summary["out"] = *out;
        std::ostringstream human;
        if (!out->empty()) {
            human << "wrote " << *out << ": " << graph.entities.size() << " entities, "
                  << graph.intra_edges.size() << " intra-level edges, "
                  << graph.crosslinks.size() << " crosslinks ("
                  << parsed.issues.size() << " records skipped)\n";
        }
        emit(opts, summary, human.str());
    });
}

void register_retrieve(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand(
        "retrieve", "Level-filtered subgraph retrieval for a query");
    cmd->fallthrough();
    struct Args {
        std::string graph_path;
        std::string query;
        int level = 0;
        int k = 5;
        int depth = -1;
        std::string out;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--graph", args->graph_path, "graph JSON file")->required();
    cmd->add_option("--query", args->query, "user question")->required();
    cmd->add_option("--level", args->level, "capability tier 0, 1 or 2")->required();
    auto k_opt = cmd->add_option("--k", args->k, "seed count (default 5)");
    auto depth_opt =
        cmd->add_option("--depth", args->depth, "hop budget (default 1 + level)");
    cmd->add_option("--out", args->out, "write the subset JSON to a file");
    cmd->callback([&opts, args, k_opt, depth_opt]() {
        apply_config(opts, k_opt, "k", args->k);
        apply_config(opts, depth_opt, "depth", args->depth);
        claf::retrieval::RetrievalRequest request;
        request.query = args->query;
        request.level = args->level;
        request.k = args->k;
        if (depth_opt->count() > 0 || opts.config.contains("depth")) {
            request.depth = args->depth;
        }
        const auto graph = claf::kg::load_graph(args->graph_path);
        const auto subset = claf::retrieval::retrieve(graph, request);
        json doc = {
            {"query", args->query},
            {"level", args->level},
            {"terms", claf::retrieval::rewrite_query(args->query, args->level)},
            {"seed_count", subset.seed_count},
            {"entities", subset_to_json(subset)},
        };
        if (!args->out.empty()) {
            std::ofstream out_file(args->out);
            if (!out_file) {
                throw claf::ClafError(claf::ErrorCode::IoFailure,
                                      "cannot open " + args->out + " for writing");
            }
            out_file << doc.dump(2) << '\n';
        }
        std::ostringstream human;
        for (std::size_t i = 0; i < subset.entities.size(); ++i) {
            const auto& scored = subset.entities[i];
            human << (i < subset.seed_count ? "seed  " : "hop   ") << scored.entity.name
                  << "  (level " << scored.entity.level << ", score " << scored.score
                  << ")\n";
        }
        emit(opts, doc, human.str());
    });
}

void register_score(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand("score", "Readability indices for a text");
    cmd->fallthrough();
    auto input = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "text file, or - for stdin")->required();
    cmd->callback([&opts, input]() {
        const std::string txt = read_input(*input);
        const auto stats = claf::readability::segment(txt);
        const auto report = claf::readability::analyze(txt);
        json doc = {
            {"sentences", stats.sentences},
            {"words", stats.words},
            {"syllables", stats.syllables},
            {"complex_words", stats.complex_words},
            {"polysyllables", stats.polysyllables},
            {"flesch_kincaid", report.flesch_kincaid},
            {"gunning_fog", report.gunning_fog},
            {"smog", report.smog},
        };
        std::ostringstream human;
        human << "sentences        " << stats.sentences << '\n'
              << "words            " << stats.words << '\n'
              << "syllables        " << stats.syllables << '\n'
              << "complex words    " << stats.complex_words << '\n'
              << "flesch-kincaid   " << report.flesch_kincaid << '\n'
              << "gunning fog      " << report.gunning_fog << '\n'
              << "smog             " << report.smog << '\n';
        emit(opts, doc, human.str());
    });
}

void register_validate_grammar(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand(
        "validate-grammar", "Check a text against a tier's surface constraints");
    cmd->fallthrough();
    auto input = std::make_shared<std::string>();
    auto level = std::make_shared<int>(0);
    cmd->add_option("--input", *input, "text file, or - for stdin")->required();
    cmd->add_option("--level", *level, "tier 0, 1 or 2")->required();
    cmd->callback([&opts, input, level]() {
        const std::string txt = read_input(*input);
        const auto report = claf::grammar::validate_text(txt, *level);
        json issues = json::array();
        for (const auto& issue : report.issues) {
            issues.push_back({
                {"code", issue.code},
                {"span", {{"begin", issue.begin}, {"end", issue.end}}},
                {"message", issue.message},
            });
        }
        json doc = {{"level", *level}, {"pass", report.pass}, {"issues", issues}};
        std::ostringstream human;
        human << (report.pass ? "PASS" : "FAIL") << " at level " << *level << '\n';
        for (const auto& issue : report.issues) {
            human << "  [" << issue.code << "] " << issue.begin << ".." << issue.end
                  << ": " << issue.message << '\n';
        }
        emit(opts, doc, human.str());
        if (!report.pass) opts.exit_code = 1;
    });
}

void register_kcg_demo(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand(
        "kcg-demo", "Greedy decoding demo with keyword control centers");
    cmd->fallthrough();
    struct Args {
        std::string graph_path;
        std::string query;
        std::string prompt;
        int level = 0;
        int k = 5;
        int depth = -1;
        int steps = 30;
        claf::kcg::KcgConfig config;
        bool trace = false;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--graph", args->graph_path, "graph JSON file")->required();
    cmd->add_option("--query", args->query, "user question")->required();
    cmd->add_option("--level", args->level, "capability tier 0, 1 or 2")->required();
    auto k_opt = cmd->add_option("--k", args->k, "seed count (default 5)");
    auto depth_opt =
        cmd->add_option("--depth", args->depth, "hop budget (default 1 + level)");
    auto steps_opt = cmd->add_option("--steps", args->steps, "tokens to decode");
    cmd->add_option("--prompt", args->prompt, "decoding prompt (default: the query)");
    auto lambda_opt = cmd->add_option("--lambda", args->config.weight_ceiling,
                                      "weight ceiling (default 2.0)");
    auto mu_opt = cmd->add_option("--mu-omega", args->config.alignment_threshold,
                                  "alignment threshold (default 0.5)");
    auto reset_opt = cmd->add_option("--reset", args->config.reset_threshold,
                                     "reset threshold (default 0.9)");
    auto alpha_opt =
        cmd->add_option("--alpha", args->config.ema_alpha, "EMA alpha (default 0.1)");
    auto floor_opt = cmd->add_option("--floor", args->config.filter_floor,
                                     "candidate filter floor (default -inf)");
    cmd->add_flag("--trace", args->trace, "print the per-step center trace");
    cmd->callback([&opts, args, k_opt, depth_opt, steps_opt, lambda_opt, mu_opt,
                   reset_opt, alpha_opt, floor_opt]() {
        apply_config(opts, k_opt, "k", args->k);
        apply_config(opts, depth_opt, "depth", args->depth);
        apply_config(opts, steps_opt, "steps", args->steps);
        apply_config(opts, lambda_opt, "lambda", args->config.weight_ceiling);
        apply_config(opts, mu_opt, "mu_omega", args->config.alignment_threshold);
        apply_config(opts, reset_opt, "reset_threshold", args->config.reset_threshold);
        apply_config(opts, alpha_opt, "ema_alpha", args->config.ema_alpha);
        apply_config(opts, floor_opt, "filter_floor", args->config.filter_floor);

        claf::retrieval::RetrievalRequest request;
        request.query = args->query;
        request.level = args->level;
        request.k = args->k;
        if (depth_opt->count() > 0 || opts.config.contains("depth")) {
            request.depth = args->depth;
        }
        const auto graph = claf::kg::load_graph(args->graph_path);
        const std::string prompt = args->prompt.empty() ? args->query : args->prompt;
        const auto result = claf::kcg::generate_demo(graph, request, prompt,
                                                     args->steps, args->config);

        std::string text;
        for (const auto& token : result.tokens) {
            if (!text.empty()) text += ' ';
            text += token;
        }
        json trace = json::array();
        for (std::size_t t = 0; t < result.trace.size(); ++t) {
            const auto& step = result.trace[t];
            json centers = json::array();
            for (const auto& center : step.centers) {
                centers.push_back({
                    {"keyword", center.keyword},
                    {"weight", center.weight},
                    {"alignment", center.cumulative_alignment},
                });
            }
            trace.push_back({{"step", t},
                             {"token", step.token},
                             {"token_id", step.token_id},
                             {"centers", centers}});
        }
        json doc = {
            {"prompt", prompt},
            {"keywords", result.keywords},
            {"skipped_keywords", result.skipped_keywords},
            {"tokens", result.tokens},
            {"text", text},
            {"trace", trace},
        };
        std::ostringstream human;
        human << text << '\n';
        if (args->trace) {
            for (std::size_t t = 0; t < result.trace.size(); ++t) {
                const auto& step = result.trace[t];
                human << "step " << t << ": " << step.token;
                for (const auto& center : step.centers) {
                    human << "  [" << center.keyword << " w=" << center.weight
                          << " a=" << center.cumulative_alignment << "]";
                }
                human << '\n';
            }
        }
        emit(opts, doc, human.str());
    });
}

void register_coherence(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand(
        "coherence", "Pairwise semantic similarity of each record's three responses");
    cmd->fallthrough();
    struct Args {
        std::string input;
        std::string out;
        double threshold = claf::scale::kDefaultCoherenceThreshold;
        std::string embedder = "auto";
        std::size_t dim = 256;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--input", args->input, "dataset JSONL file")->required();
    cmd->add_option("--out", args->out, "write per-record reports as JSONL");
    auto threshold_opt =
        cmd->add_option("--threshold", args->threshold, "pass threshold (default 0.75)");
    cmd->add_option("--embedder", args->embedder,
                    "hashed | http | auto (http when CLAF_EMBED_URL is set)")
        ->check(CLI::IsMember({"hashed", "http", "auto"}));
    cmd->add_option("--dim", args->dim, "embedding dimension (default 256)");
    cmd->callback([&opts, args, threshold_opt]() {
        apply_config(opts, threshold_opt, "threshold", args->threshold);
        const auto records = claf::scale::load_records(args->input);

        std::unique_ptr<claf::embed::Embedder> embedder;
        std::string chosen = args->embedder;
        if (chosen == "auto") {
            const char* url = std::getenv("CLAF_EMBED_URL");
            chosen = (url != nullptr && *url != '\0') ? "http" : "hashed";
        }
        if (chosen == "http") {
            embedder = std::make_unique<claf::embed::HttpEmbedder>(
                claf::embed::HttpEmbedder::from_env(args->dim));
        } else {
            embedder = std::make_unique<claf::embed::HashedBowEmbedder>(args->dim);
        }

        const auto reports =
            claf::scale::verify_records(records, *embedder, args->threshold);
        std::size_t passed = 0;
        json failing = json::array();
        for (const auto& report : reports) {
            if (report.pass) {
                ++passed;
            } else {
                failing.push_back(report.record_id);
            }
        }
        if (!args->out.empty()) {
            std::ofstream out_file(args->out);
            if (!out_file) {
                throw claf::ClafError(claf::ErrorCode::IoFailure,
                                      "cannot open " + args->out + " for writing");
            }
            for (const auto& report : reports) {
                json line = {
                    {"record_id", report.record_id},
                    {"sim_basic_intermediate", report.sim_basic_intermediate},
                    {"sim_intermediate_advanced", report.sim_intermediate_advanced},
                    {"sim_basic_advanced", report.sim_basic_advanced},
                    {"threshold", report.threshold},
                    {"pass", report.pass},
                };
                out_file << line.dump() << '\n';
            }
        }
        json doc = {
            {"n", reports.size()},
            {"passed", passed},
            {"failed", reports.size() - passed},
            {"threshold", args->threshold},
            {"embedder", chosen},
            {"failing_ids", failing},
        };
        std::ostringstream human;
        human << passed << "/" << reports.size() << " records coherent at threshold "
              << args->threshold << '\n';
        for (const auto& id : failing) {
            human << "  fail: " << id.get<std::string>() << '\n';
        }
        emit(opts, doc, human.str());
        if (passed != reports.size()) opts.exit_code = 1;
    });
}

void register_eval(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand(
        "eval", "Judge every record's three responses and aggregate the scores");
    cmd->fallthrough();
    struct Args {
        std::string input;
        std::string out;
        std::string replay;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--input", args->input, "dataset JSONL file")->required();
    cmd->add_option("--out", args->out, "results JSONL path")->required();
    cmd->add_option("--replay", args->replay,
                    "JSONL of stored judge completions; omit to call the live "
                    "judge from CLAF_JUDGE_URL");
    cmd->callback([&opts, args]() {
        const auto records = claf::scale::load_records(args->input);
        std::unique_ptr<claf::judge::JudgeClient> judge;
        if (!args->replay.empty()) {
            judge = std::make_unique<claf::judge::ReplayJudgeClient>(
                claf::judge::ReplayJudgeClient::from_file(args->replay));
        } else {
            judge = std::make_unique<claf::judge::HttpJudgeClient>(
                claf::judge::HttpJudgeClient::from_env());
        }
        const auto run = claf::harness::run_eval(records, *judge, args->out);
        for (const auto& failure : run.failures) {
            std::cerr << "excluded " << failure.record_id << ": " << failure.message
                      << '\n';
        }
        json doc = {
            {"n", run.report.n},
            {"excluded_count", run.failures.size()},
            {"mean_basic", run.report.mean_basic},
            {"mean_intermediate", run.report.mean_intermediate},
            {"mean_advanced", run.report.mean_advanced},
            {"average", run.report.average},
            {"results", args->out},
            {"report", args->out + ".report.json"},
        };
        std::ostringstream human;
        human << "n=" << run.report.n << " (excluded " << run.failures.size() << ")\n"
              << "mean basic         " << run.report.mean_basic << '\n'
              << "mean intermediate  " << run.report.mean_intermediate << '\n'
              << "mean advanced      " << run.report.mean_advanced << '\n'
              << "average            " << run.report.average << '\n'
              << "results -> " << args->out << '\n';
        emit(opts, doc, human.str());
    });
}

void register_stats(CLI::App& app, GlobalOptions& opts) {
    auto cmd = app.add_subcommand("stats", "Category composition of a dataset");
    cmd->fallthrough();
    auto input = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "dataset JSONL file")->required();
    cmd->callback([&opts, input]() {
        const auto records = claf::scale::load_records(*input);
        const auto result = claf::scale::stats(records);
        json categories = json::object();
        std::ostringstream human;
        for (const auto& [category, count] : result.category_counts) {
            categories[category] = count;
            human << category << "  " << count << '\n';
        }
        human << "total  " << result.total << '\n';
        json doc = {{"total", result.total}, {"categories", categories}};
        emit(opts, doc, human.str());
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tiered knowledge graphs, controllable decoding and dataset checks"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--json", opts.json_output, "machine-readable output on stdout");
    app.add_option("--seed", opts.seed,
                   "seed for stochastic strategies (built-ins are deterministic)");
    app.add_option("--config", opts.config_path,
                   "JSON file of default knob values (flags win)");

    register_build_graph(app, opts);
    register_retrieve(app, opts);
    register_score(app, opts);
    register_validate_grammar(app, opts);
    register_kcg_demo(app, opts);
    register_coherence(app, opts);
    register_eval(app, opts);
    register_stats(app, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return opts.exit_code;
}
