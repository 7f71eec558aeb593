#include "claf/embedder.hpp"

#include <cmath>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "httplib.h"

#include "claf/error.hpp"
#include "claf/http_util.hpp"
#include "claf/textutil.hpp"

namespace claf::embed {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : data) {
        hash ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

HashedBowEmbedder::HashedBowEmbedder(std::size_t dimension) : dimension_(dimension) {
    if (dimension_ == 0) {
        throw ClafError(ErrorCode::InvalidConfig, "embedding dimension must be positive");
    }
}

std::vector<std::vector<double>> HashedBowEmbedder::embed(
    const std::vector<std::string>& texts) const {
    std::vector<std::vector<double>> out;
    out.reserve(texts.size());
    for (const auto& txt : texts) {
        std::vector<double> vec(dimension_, 0.0);
        for (const auto& token : text::lower_word_tokens(txt)) {
            vec[fnv1a64(token) % dimension_] += 1.0;
        }
        double norm = 0.0;
        for (const double v : vec) norm += v * v;
        if (norm > 0.0) {
            norm = std::sqrt(norm);
            for (double& v : vec) v /= norm;
        }
        out.push_back(std::move(vec));
    }
    return out;
}

HttpEmbedder::HttpEmbedder(std::string endpoint, std::size_t dimension)
    : dimension_(dimension) {
    if (dimension_ == 0) {
        throw ClafError(ErrorCode::InvalidConfig, "embedding dimension must be positive");
    }
    auto split = net::split_endpoint(endpoint);
    base_ = std::move(split.base);
    path_ = std::move(split.path);
}

HttpEmbedder HttpEmbedder::from_env(std::size_t dimension) {
    const char* url = std::getenv("CLAF_EMBED_URL");
    if (url == nullptr || *url == '\0') {
        throw ClafError(ErrorCode::InvalidConfig, "CLAF_EMBED_URL is not set");
    }
    return HttpEmbedder(url, dimension);
}

std::vector<std::vector<double>> HttpEmbedder::embed(
    const std::vector<std::string>& texts) const {
    nlohmann::json body;
    body["texts"] = texts;

    httplib::Client client(base_);
    client.set_read_timeout(30, 0);
    auto response = client.Post(path_, body.dump(), "application/json");
    if (!response) {
        throw ClafError(ErrorCode::IoFailure, "embedding request to " + base_ + " failed");
    }
    if (response->status != 200) {
        throw ClafError(ErrorCode::IoFailure,
                        "embedding request returned status " +
                            std::to_string(response->status));
    }

    nlohmann::json doc = nlohmann::json::parse(response->body, nullptr, false);
    if (doc.is_discarded() || !doc.contains("vectors") || !doc["vectors"].is_array()) {
        throw ClafError(ErrorCode::SchemaMismatch,
                        "embedding response is not {\"vectors\": [...]}");
    }
    const auto& vectors = doc["vectors"];
    if (vectors.size() != texts.size()) {
        throw ClafError(ErrorCode::SchemaMismatch,
                        "embedding response has " + std::to_string(vectors.size()) +
                            " vectors for " + std::to_string(texts.size()) + " texts");
    }

    std::vector<std::vector<double>> out;
    out.reserve(vectors.size());
    for (const auto& row : vectors) {
        if (!row.is_array() || row.size() != dimension_) {
            throw ClafError(ErrorCode::SchemaMismatch,
                            "embedding vector does not have dimension " +
                                std::to_string(dimension_));
        }
        std::vector<double> vec;
        vec.reserve(dimension_);
        for (const auto& v : row) {
            if (!v.is_number()) {
                throw ClafError(ErrorCode::SchemaMismatch,
                                "embedding vector entry is not numeric");
            }
            vec.push_back(v.get<double>());
        }
        out.push_back(std::move(vec));
    }
    return out;
}

} // namespace claf::embed
