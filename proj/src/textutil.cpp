#include "claf/textutil.hpp"
#include "claf/error.hpp"

#include <algorithm>
#include <cctype>

namespace claf {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedRecord:    return "MalformedRecord";
        case ErrorCode::UnknownLevel:       return "UnknownLevel";
        case ErrorCode::DanglingEndpoint:   return "DanglingEndpoint";
        case ErrorCode::IoFailure:          return "IoFailure";
        case ErrorCode::SchemaMismatch:     return "SchemaMismatch";
        case ErrorCode::SchemaViolation:    return "SchemaViolation";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::DegenerateInput:    return "DegenerateInput";
        case ErrorCode::EmptySentence:      return "EmptySentence";
        case ErrorCode::LengthMismatch:     return "LengthMismatch";
        case ErrorCode::DimensionMismatch:  return "DimensionMismatch";
        case ErrorCode::ZeroVector:         return "ZeroVector";
        case ErrorCode::EmptyField:         return "EmptyField";
        case ErrorCode::InsufficientScores: return "InsufficientScores";
        case ErrorCode::OutOfRange:         return "OutOfRange";
        case ErrorCode::EmptyInput:         return "EmptyInput";
        case ErrorCode::InvalidConfig:      return "InvalidConfig";
    }
    return "UnknownError";
}

} // namespace claf

namespace claf::text {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string fold(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

char fold_char(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_word_char(char c) { return is_alpha(c) || is_digit(c); }

std::vector<std::string> lower_word_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (is_word_char(c)) {
            cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<Token> word_tokens(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        if (!is_word_char(s[i])) { ++i; continue; }
        std::size_t b = i;
        while (i < n) {
            if (is_word_char(s[i])) { ++i; continue; }
            // apostrophe glued between letters stays inside the token
            if (s[i] == '\'' && i + 1 < n && is_alpha(s[i + 1]) && i > b && is_alpha(s[i - 1])) {
                ++i;
                continue;
            }
            break;
        }
        out.push_back({std::string(s.substr(b, i - b)), b, i});
    }
    return out;
}

bool contains_word(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return false;
    const std::string h = fold(haystack);
    const std::string n = fold(needle);
    std::size_t pos = 0;
    while ((pos = h.find(n, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || !is_word_char(h[pos - 1]);
        const std::size_t after = pos + n.size();
        const bool right_ok = after == h.size() || !is_word_char(h[after]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

std::vector<std::string> split(std::string_view s, std::string_view delim) {
    std::vector<std::string> out;
    if (delim.empty()) {
        out.emplace_back(s);
        return out;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            return out;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + delim.size();
    }
}

bool ascii_dominant(std::string_view s) {
    std::size_t ascii = 0, other = 0;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (static_cast<unsigned char>(c) < 128) ++ascii; else ++other;
    }
    if (ascii + other == 0) return true;
    return ascii * 2 >= (ascii + other);
}

} // namespace claf::text
