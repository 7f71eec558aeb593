#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace claf::embed {

/// Maps texts to fixed-width vectors. Implementations must be deterministic
/// for a given input and safe to call from multiple threads.
class Embedder {
public:
    virtual ~Embedder() = default;
    virtual std::size_t dimension() const = 0;
    virtual std::vector<std::vector<double>> embed(
        const std::vector<std::string>& texts) const = 0;
};

/// FNV-1a 64-bit hash; used instead of std::hash so bucket assignment is
/// identical across platforms and standard libraries.
std::uint64_t fnv1a64(std::string_view data);

/// Offline embedder: lowercased word counts hashed into a fixed number of
/// buckets, then unit-normalized. A text with no words maps to the zero
/// vector (similarity code treats that as an error, not the embedder).
class HashedBowEmbedder : public Embedder {
public:
    explicit HashedBowEmbedder(std::size_t dimension = 256);
    std::size_t dimension() const override { return dimension_; }
    std::vector<std::vector<double>> embed(
        const std::vector<std::string>& texts) const override;

private:
    std::size_t dimension_;
};

/// Remote embedder speaking JSON over HTTP:
/// POST <endpoint> {"texts": [...]} -> {"vectors": [[...], ...]}.
class HttpEmbedder : public Embedder {
public:
    /// endpoint: full URL, e.g. "http://127.0.0.1:8900/embed".
    HttpEmbedder(std::string endpoint, std::size_t dimension);
    /// Reads the endpoint from CLAF_EMBED_URL; throws
    /// ClafError(InvalidConfig) when unset.
    static HttpEmbedder from_env(std::size_t dimension);

    std::size_t dimension() const override { return dimension_; }
    std::vector<std::vector<double>> embed(
        const std::vector<std::string>& texts) const override;

private:
    std::string base_;
    std::string path_;
    std::size_t dimension_;
};

} // namespace claf::embed
