#pragma once

#include <string>
#include <string_view>
#include <unordered_set>

namespace claf::text {

// Embedded English stoplist. Bump the version when the list changes so
// downstream rankings can be tied to a specific revision.
inline constexpr int kStopwordListVersion = 1;

const std::unordered_set<std::string>& stopwords();

bool is_stopword(std::string_view lower_token);

} // namespace claf::text
