#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace claf::readability {

struct TextStats {
    std::size_t sentences = 0;
    std::size_t words = 0;
    std::size_t syllables = 0;
    std::size_t complex_words = 0;  // words with >= 3 syllables
    std::size_t polysyllables = 0;  // same rule; kept separate as the SMOG unit
};

struct ReadabilityReport {
    double flesch_kincaid = 0.0;
    double gunning_fog = 0.0;
    double smog = 0.0;
};

struct SentenceSpan {
    std::string sentence;
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Sentences split on runs of [.?!] followed by whitespace or end of text.
/// Trailing words without a terminator still form a sentence.
std::vector<SentenceSpan> split_sentences(std::string_view txt);

/// Syllables for a single word: maximal vowel-group runs (a e i o u y), one
/// subtracted for a terminal silent "e" unless the word ends in consonant +
/// "le", minimum one. Tokens without letters count one syllable.
std::size_t count_syllables(std::string_view word);

TextStats segment(std::string_view txt);

// Grade-level indices. Each throws ClafError(DegenerateInput) when its
// denominators are zero.
double flesch_kincaid(const TextStats& stats);
double gunning_fog(const TextStats& stats);
double smog(const TextStats& stats);

/// Segments and applies all three indices. Rejects non-ASCII-dominant text
/// with DegenerateInput instead of producing nonsense on scripts the
/// heuristics do not cover.
ReadabilityReport analyze(std::string_view txt);

} // namespace claf::readability
