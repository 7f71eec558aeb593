#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace claf::grammar {

/// Surface-constraint profile for one cognitive tier. The tier grammars are
/// checked as the enumerable constraints they state (tense, nesting depth,
/// prohibited constructions) over a small function-word lexicon; this is a
/// structural validator, not a parser.
struct LevelGrammar {
    int level = 0;
    int max_clause_depth = 1;            // max subordinate nesting, not total depth
    std::set<std::string> allowed_tenses;
    std::set<std::string> allowed_modals;
    bool forbid_passive = false;
    bool forbid_gerund_subject = false;

    static LevelGrammar for_level(int level);
};

struct Issue {
    std::string code;
    std::size_t begin = 0; // character span into the validated text
    std::size_t end = 0;
    std::string message;
};

struct ValidationReport {
    bool pass = true;
    std::vector<Issue> issues;
};

/// 1 + number of subordinators (that/which/who/because/if/when) that are
/// followed later in the sentence by a verb-like token. Minimum 1.
int clause_depth(std::string_view sentence);

/// Validates one sentence against a tier profile. Issue codes:
/// CLAUSE_DEPTH, PASSIVE, MODAL_NOT_ALLOWED, GERUND_SUBJECT, PAST_TENSE.
/// Throws ClafError(EmptySentence) when the sentence has no words.
ValidationReport validate(std::string_view sentence, const LevelGrammar& grammar);
ValidationReport validate(std::string_view sentence, int level);

/// Splits multi-sentence text and validates each sentence; issue spans are
/// absolute into the original text.
ValidationReport validate_text(std::string_view txt, int level);

} // namespace claf::grammar
