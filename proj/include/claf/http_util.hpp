#pragma once

#include <string>

#include "claf/error.hpp"

namespace claf::net {

struct Endpoint {
    std::string base; // scheme://host[:port], what the HTTP client connects to
    std::string path; // request path, "/" when the URL has none
};

/// Splits "http://host:port/some/path" for the HTTP client.
inline Endpoint split_endpoint(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ClafError(ErrorCode::InvalidConfig,
                        "endpoint \"" + url + "\" has no scheme");
    }
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        return {url, "/"};
    }
    return {url.substr(0, path_start), url.substr(path_start)};
}

} // namespace claf::net
