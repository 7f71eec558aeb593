#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace claf::text {

std::string trim(std::string_view s);

/// ASCII lowercase copy.
std::string fold(std::string_view s);

/// ASCII lowercase of a single character.
char fold_char(char c);

bool is_word_char(char c);

/// Lowercased alphanumeric token runs, in order of appearance.
std::vector<std::string> lower_word_tokens(std::string_view s);

struct Token {
    std::string value;
    std::size_t begin = 0; // byte offset into the source
    std::size_t end = 0;   // one past the last byte
};

/// Tokens as they appear in the text (case preserved). A token is a maximal
/// run of letters/digits, with apostrophes allowed between letters.
std::vector<Token> word_tokens(std::string_view s);

/// Case-insensitive whole-word containment. `needle` may itself contain
/// several words; boundaries are checked at both ends of the match.
bool contains_word(std::string_view haystack, std::string_view needle);

std::vector<std::string> split(std::string_view s, std::string_view delim);

bool ascii_dominant(std::string_view s);

} // namespace claf::text
