#pragma once

#include <string>
#include <unordered_map>

namespace claf::judge {

/// A scoring model reachable by prompt. Implementations must be safe to call
/// concurrently; `record_id` identifies the dataset row the prompt belongs to
/// so offline implementations can replay stored completions.
class JudgeClient {
public:
    virtual ~JudgeClient() = default;
    virtual std::string complete(const std::string& record_id,
                                 const std::string& prompt) const = 0;
};

/// Remote judge speaking JSON over HTTP:
/// POST <endpoint> {"prompt": "..."} -> {"completion": "..."}.
/// An API key, when present, is sent as a bearer token.
class HttpJudgeClient : public JudgeClient {
public:
    HttpJudgeClient(std::string endpoint, std::string api_key = "");
    /// Endpoint from CLAF_JUDGE_URL (required), key from CLAF_JUDGE_KEY.
    static HttpJudgeClient from_env();

    std::string complete(const std::string& record_id,
                         const std::string& prompt) const override;

private:
    std::string base_;
    std::string path_;
    std::string api_key_;
};

/// Offline judge that replays completions stored as JSONL lines of
/// {"record_id": "...", "completion": "..."}. Lookup is by record id; asking
/// for an id the file does not contain is an error.
class ReplayJudgeClient : public JudgeClient {
public:
    explicit ReplayJudgeClient(std::unordered_map<std::string, std::string> completions);
    static ReplayJudgeClient from_file(const std::string& path);

    std::string complete(const std::string& record_id,
                         const std::string& prompt) const override;
    std::size_t size() const { return completions_.size(); }

private:
    std::unordered_map<std::string, std::string> completions_;
};

} // namespace claf::judge
