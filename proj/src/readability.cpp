#include "claf/readability.hpp"

#include "claf/error.hpp"
#include "claf/textutil.hpp"

#include <cctype>
#include <cmath>

namespace claf::readability {

namespace {

bool is_vowel(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
            return true;
        default:
            return false;
    }
}

bool is_terminator(char c) { return c == '.' || c == '?' || c == '!'; }

} // namespace

std::vector<SentenceSpan> split_sentences(std::string_view txt) {
    std::vector<SentenceSpan> out;
    const std::size_t n = txt.size();
    std::size_t start = 0;
    std::size_t i = 0;
    auto flush = [&](std::size_t end) {
        std::string_view piece = txt.substr(start, end - start);
        if (!text::word_tokens(piece).empty())
            out.push_back({std::string(piece), start, end});
    };
    while (i < n) {
        if (is_terminator(txt[i])) {
            std::size_t run_end = i;
            while (run_end < n && is_terminator(txt[run_end])) ++run_end;
            const bool boundary =
                run_end == n || std::isspace(static_cast<unsigned char>(txt[run_end]));
            if (boundary) {
                flush(run_end);
                start = run_end;
            }
            i = run_end;
        } else {
            ++i;
        }
    }
    if (start < n) flush(n);
    return out;
}

std::size_t count_syllables(std::string_view word) {
    std::string letters;
    for (char c : word)
        if (std::isalpha(static_cast<unsigned char>(c)))
            letters += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (letters.empty()) return 1; // numeric token

    std::size_t groups = 0;
    bool in_group = false;
    for (char c : letters) {
        if (is_vowel(c)) {
            if (!in_group) { ++groups; in_group = true; }
        } else {
            in_group = false;
        }
    }

    const std::size_t len = letters.size();
    if (letters.back() == 'e') {
        const bool consonant_le =
            len >= 3 && letters[len - 2] == 'l' && !is_vowel(letters[len - 3]);
        if (!consonant_le && groups > 0) --groups;
    }
    return groups == 0 ? 1 : groups;
}

TextStats segment(std::string_view txt) {
    TextStats stats;
    stats.sentences = split_sentences(txt).size();
    for (const text::Token& token : text::word_tokens(txt)) {
        ++stats.words;
        const std::size_t syl = count_syllables(token.value);
        stats.syllables += syl;
        if (syl >= 3) {
            ++stats.complex_words;
            ++stats.polysyllables;
        }
    }
    return stats;
}

double flesch_kincaid(const TextStats& stats) {
    if (stats.sentences == 0 || stats.words == 0)
        throw ClafError(ErrorCode::DegenerateInput, "needs at least one sentence and one word");
    const double w = static_cast<double>(stats.words);
    const double s = static_cast<double>(stats.sentences);
    const double syl = static_cast<double>(stats.syllables);
    return 0.39 * (w / s) + 11.8 * (syl / w) - 15.59;
}

double gunning_fog(const TextStats& stats) {
    if (stats.sentences == 0 || stats.words == 0)
        throw ClafError(ErrorCode::DegenerateInput, "needs at least one sentence and one word");
    const double w = static_cast<double>(stats.words);
    const double s = static_cast<double>(stats.sentences);
    const double cx = static_cast<double>(stats.complex_words);
    return 0.4 * ((w / s) + 100.0 * (cx / w));
}

double smog(const TextStats& stats) {
    if (stats.sentences == 0)
        throw ClafError(ErrorCode::DegenerateInput, "needs at least one sentence");
    const double poly = static_cast<double>(stats.polysyllables);
    const double s = static_cast<double>(stats.sentences);
    return 1.0430 * std::sqrt(poly * 30.0 / s) + 3.1291;
}

ReadabilityReport analyze(std::string_view txt) {
    if (!text::ascii_dominant(txt))
        throw ClafError(ErrorCode::DegenerateInput,
                        "text is not ASCII-dominant; indices are undefined for it");
    const TextStats stats = segment(txt);
    return {flesch_kincaid(stats), gunning_fog(stats), smog(stats)};
}

} // namespace claf::readability
