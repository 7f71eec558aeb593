#include "claf/grammar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "claf/error.hpp"
#include "claf/graph.hpp"
#include "claf/readability.hpp"
#include "claf/textutil.hpp"

namespace claf::grammar {
namespace {

const std::unordered_set<std::string>& subordinators() {
    static const std::unordered_set<std::string> kSet = {
        "that", "which", "who", "because", "if", "when",
    };
    return kSet;
}

const std::unordered_set<std::string>& be_forms() {
    static const std::unordered_set<std::string> kSet = {
        "am", "is", "are", "was", "were", "be", "been", "being",
    };
    return kSet;
}

const std::unordered_set<std::string>& modal_verbs() {
    static const std::unordered_set<std::string> kSet = {
        "can", "could", "may", "might", "must", "shall", "should", "will", "would",
    };
    return kSet;
}

const std::unordered_set<std::string>& auxiliary_verbs() {
    static const std::unordered_set<std::string> kSet = {
        "am", "is", "are", "was", "were", "be", "been", "being",
        "do", "does", "did", "have", "has", "had",
        "can", "could", "may", "might", "must", "shall", "should", "will", "would",
    };
    return kSet;
}

// Irregular past participles that carry neither an -ed nor an -en suffix, plus
// the common -en participles, so passive detection does not hinge on suffixes
// alone.
const std::unordered_set<std::string>& irregular_participles() {
    static const std::unordered_set<std::string> kSet = {
        "been",   "done",    "made",   "taken",   "given",  "seen",    "known",
        "shown",  "grown",   "thrown", "blown",   "drawn",  "flown",   "worn",
        "torn",   "born",    "sworn",  "chosen",  "frozen", "spoken",  "broken",
        "stolen", "woken",   "driven", "eaten",   "fallen", "gotten",  "hidden",
        "ridden", "risen",   "written","beaten",  "bitten", "begun",   "become",
        "sung",   "rung",    "hung",   "swung",   "brought","bought",  "caught",
        "taught", "thought", "fought", "sought",  "built",  "sent",    "spent",
        "kept",   "felt",    "left",   "meant",   "met",    "said",    "paid",
        "told",   "sold",    "found",  "heard",   "held",   "stood",   "understood",
        "won",    "lost",    "put",    "set",     "cut",    "let",     "hurt",
        "spread", "led",     "fed",
    };
    return kSet;
}

// Words ending in -ing that are overwhelmingly nouns or base verbs, kept out of
// the gerund-subject heuristic.
const std::unordered_set<std::string>& ing_exceptions() {
    static const std::unordered_set<std::string> kSet = {
        "bring",  "thing",    "king",      "sing",       "ring",     "wing",
        "spring", "string",   "nothing",   "something",  "anything", "everything",
        "morning","evening",  "during",
    };
    return kSet;
}

bool ends_with(std::string_view word, std::string_view suffix) {
    return word.size() >= suffix.size() &&
           word.substr(word.size() - suffix.size()) == suffix;
}

bool is_verb_candidate(const std::string& folded) {
    if (auxiliary_verbs().count(folded) > 0) return true;
    if (irregular_participles().count(folded) > 0) return true;
    if (folded.size() >= 4 && (ends_with(folded, "ed") || ends_with(folded, "ing"))) return true;
    if (folded.size() >= 3 && (ends_with(folded, "es") || ends_with(folded, "s"))) return true;
    return false;
}

bool is_past_participle(const std::string& folded) {
    if (irregular_participles().count(folded) > 0) return true;
    return folded.size() >= 4 && (ends_with(folded, "ed") || ends_with(folded, "en"));
}

// Surface marker for a simple-past main verb: was/were/did, or a regular -ed
// form ("-eed" words such as "need" are exempt).
bool is_past_marker(const std::string& folded) {
    if (folded == "was" || folded == "were" || folded == "did") return true;
    return folded.size() >= 4 && ends_with(folded, "ed") && !ends_with(folded, "eed");
}

bool is_gerund_form(const std::string& folded) {
    return folded.size() >= 5 && ends_with(folded, "ing") &&
           ing_exceptions().count(folded) == 0;
}

struct FoldedToken {
    std::string folded;
    std::size_t begin = 0;
    std::size_t end = 0;
};

std::vector<FoldedToken> folded_tokens(std::string_view sentence) {
    std::vector<FoldedToken> out;
    for (const auto& tok : text::word_tokens(sentence)) {
        out.push_back({text::fold(tok.value), tok.begin, tok.end});
    }
    return out;
}

} // namespace

LevelGrammar LevelGrammar::for_level(int level) {
    if (!kg::is_valid_level(level)) {
        throw ClafError(ErrorCode::UnknownLevel,
                        "no grammar profile for level " + std::to_string(level));
    }
    LevelGrammar g;
    g.level = level;
    switch (level) {
        case kg::kLevelBasic:
            g.max_clause_depth = 1;
            g.allowed_tenses = {"present"};
            g.allowed_modals = {};
            g.forbid_passive = true;
            g.forbid_gerund_subject = true;
            break;
        case kg::kLevelIntermediate:
            g.max_clause_depth = 2;
            g.allowed_tenses = {"present", "past", "future"};
            g.allowed_modals = {"can", "may", "will"};
            g.forbid_passive = false;
            g.forbid_gerund_subject = false;
            break;
        default: // advanced: no structural restrictions
            g.max_clause_depth = std::numeric_limits<int>::max();
            g.allowed_tenses = {"present", "past", "future"};
            g.allowed_modals = std::set<std::string>(modal_verbs().begin(),
                                                     modal_verbs().end());
            g.forbid_passive = false;
            g.forbid_gerund_subject = false;
            break;
    }
    return g;
}

int clause_depth(std::string_view sentence) {
    const auto tokens = folded_tokens(sentence);
    int depth = 1;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (subordinators().count(tokens[i].folded) == 0) continue;
        for (std::size_t j = i + 1; j < tokens.size(); ++j) {
            if (is_verb_candidate(tokens[j].folded)) {
                ++depth;
                break;
            }
        }
    }
    return depth;
}

ValidationReport validate(std::string_view sentence, const LevelGrammar& grammar) {
    const auto tokens = folded_tokens(sentence);
    if (tokens.empty()) {
        throw ClafError(ErrorCode::EmptySentence, "sentence has no words");
    }

    ValidationReport report;
    auto add = [&report](std::string code, std::size_t begin, std::size_t end,
                         std::string message) {
        report.pass = false;
        report.issues.push_back({std::move(code), begin, end, std::move(message)});
    };

    const int nesting = clause_depth(sentence) - 1;
    if (nesting > grammar.max_clause_depth) {
        std::ostringstream msg;
        msg << "clause nesting " << nesting << " exceeds limit "
            << grammar.max_clause_depth;
        add("CLAUSE_DEPTH", tokens.front().begin, tokens.back().end, msg.str());
    }

    if (grammar.forbid_passive) {
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (be_forms().count(tokens[i].folded) == 0) continue;
            const std::size_t limit = std::min(tokens.size(), i + 4);
            for (std::size_t j = i + 1; j < limit; ++j) {
                if (is_past_participle(tokens[j].folded)) {
                    add("PASSIVE", tokens[i].begin, tokens[j].end,
                        "passive construction \"" + tokens[i].folded + " ... " +
                            tokens[j].folded + "\"");
                    break;
                }
            }
        }
    }

    for (const auto& tok : tokens) {
        if (modal_verbs().count(tok.folded) == 0) continue;
        if (grammar.allowed_modals.count(tok.folded) == 0) {
            add("MODAL_NOT_ALLOWED", tok.begin, tok.end,
                "modal \"" + tok.folded + "\" not allowed at level " +
                    std::to_string(grammar.level));
        }
    }

    if (grammar.forbid_gerund_subject && is_gerund_form(tokens.front().folded)) {
        add("GERUND_SUBJECT", tokens.front().begin, tokens.front().end,
            "gerund subject \"" + tokens.front().folded + "\"");
    }

    if (grammar.allowed_tenses.count("past") == 0) {
        for (const auto& tok : tokens) {
            if (is_past_marker(tok.folded)) {
                add("PAST_TENSE", tok.begin, tok.end,
                    "past-tense marker \"" + tok.folded + "\"");
                break;
            }
        }
    }

    return report;
}

ValidationReport validate(std::string_view sentence, int level) {
    return validate(sentence, LevelGrammar::for_level(level));
}

ValidationReport validate_text(std::string_view txt, int level) {
    const auto grammar = LevelGrammar::for_level(level);
    const auto spans = readability::split_sentences(txt);
    if (spans.empty()) {
        throw ClafError(ErrorCode::EmptySentence, "text has no sentences");
    }
    ValidationReport report;
    for (const auto& span : spans) {
        auto one = validate(span.sentence, grammar);
        if (one.pass) continue;
        report.pass = false;
        for (auto& issue : one.issues) {
            issue.begin += span.begin;
            issue.end += span.begin;
            report.issues.push_back(std::move(issue));
        }
    }
    return report;
}

} // namespace claf::grammar
