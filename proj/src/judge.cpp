#include "claf/judge.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "httplib.h"

#include "claf/error.hpp"
#include "claf/http_util.hpp"
#include "claf/textutil.hpp"

namespace claf::judge {

HttpJudgeClient::HttpJudgeClient(std::string endpoint, std::string api_key)
    : api_key_(std::move(api_key)) {
    auto split = net::split_endpoint(endpoint);
    base_ = std::move(split.base);
    path_ = std::move(split.path);
}

HttpJudgeClient HttpJudgeClient::from_env() {
    const char* url = std::getenv("CLAF_JUDGE_URL");
    if (url == nullptr || *url == '\0') {
        throw ClafError(ErrorCode::InvalidConfig, "CLAF_JUDGE_URL is not set");
    }
    const char* key = std::getenv("CLAF_JUDGE_KEY");
    return HttpJudgeClient(url, key == nullptr ? "" : key);
}

std::string HttpJudgeClient::complete(const std::string& record_id,
                                      const std::string& prompt) const {
    nlohmann::json body;
    body["prompt"] = prompt;

    httplib::Client client(base_);
    client.set_read_timeout(60, 0);
    httplib::Headers headers;
    if (!api_key_.empty()) {
        headers.emplace("Authorization", "Bearer " + api_key_);
    }
    auto response = client.Post(path_, headers, body.dump(), "application/json");
    if (!response) {
        throw ClafError(ErrorCode::IoFailure,
                        "judge request for record \"" + record_id + "\" failed");
    }
    if (response->status != 200) {
        throw ClafError(ErrorCode::IoFailure,
                        "judge request for record \"" + record_id +
                            "\" returned status " + std::to_string(response->status));
    }

    nlohmann::json doc = nlohmann::json::parse(response->body, nullptr, false);
    if (doc.is_discarded() || !doc.contains("completion") ||
        !doc["completion"].is_string()) {
        throw ClafError(ErrorCode::SchemaMismatch,
                        "judge response is not {\"completion\": \"...\"}");
    }
    return doc["completion"].get<std::string>();
}

ReplayJudgeClient::ReplayJudgeClient(
    std::unordered_map<std::string, std::string> completions)
    : completions_(std::move(completions)) {}

ReplayJudgeClient ReplayJudgeClient::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ClafError(ErrorCode::IoFailure, "cannot open " + path);
    }
    std::unordered_map<std::string, std::string> completions;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (text::trim(line).empty()) continue;
        nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("record_id") ||
            !doc["record_id"].is_string() || !doc.contains("completion") ||
            !doc["completion"].is_string()) {
            throw ClafError(ErrorCode::SchemaViolation,
                            path + ":" + std::to_string(line_number) +
                                ": expected {\"record_id\", \"completion\"}");
        }
        completions[doc["record_id"].get<std::string>()] =
            doc["completion"].get<std::string>();
    }
    return ReplayJudgeClient(std::move(completions));
}

std::string ReplayJudgeClient::complete(const std::string& record_id,
                                        const std::string& /*prompt*/) const {
    const auto it = completions_.find(record_id);
    if (it == completions_.end()) {
        throw ClafError(ErrorCode::IoFailure,
                        "no replay completion for record \"" + record_id + "\"");
    }
    return it->second;
}

} // namespace claf::judge
