#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cds::harness {

using json = nlohmann::json;

/// One completion request. The metadata block (query_id, method, seed,
/// shots, sample_index) identifies the evaluation cell; scripted test
/// endpoints key on it, transport endpoints ignore it.
struct ChatRequest {
    std::string model;
    std::string prompt;
    double temperature = 0.0;
    int max_tokens = 0;              // 0 = endpoint default
    std::optional<bool> thinking;    // passthrough flag, not interpreted

    std::string query_id;
    std::string method;
    std::uint64_t seed = 0;
    std::size_t shots = 0;
    int sample_index = -1;
};

struct TokenUsage {
    std::optional<long> prompt_tokens;
    std::optional<long> completion_tokens;
};

struct ChatResponse {
    std::string text;
    TokenUsage usage;
};

class ChatEndpoint {
public:
    virtual ~ChatEndpoint() = default;
    virtual ChatResponse complete(const ChatRequest& request) = 0;
};

/// Returns a fixed completion per query id; unknown ids get `fallback`.
class EchoEndpoint final : public ChatEndpoint {
public:
    explicit EchoEndpoint(std::map<std::string, std::string> by_query_id,
                          std::string fallback = "");
    ChatResponse complete(const ChatRequest& request) override;

private:
    std::map<std::string, std::string> by_query_id_;
    std::string fallback_;
};

/// One scripted completion rule. Unset constraints match anything; the rule
/// matching the most constraints wins, earliest rule on ties. Stateless, so
/// resumed runs replay identically.
struct ScriptRule {
    std::string query_id;  // empty = wildcard
    std::optional<std::string> method;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> shots;
    std::optional<int> sample_index;
    std::string completion;
};

class ScriptedEndpoint final : public ChatEndpoint {
public:
    explicit ScriptedEndpoint(std::vector<ScriptRule> rules, std::string fallback = "");
    ChatResponse complete(const ChatRequest& request) override;

    /// Last request seen; for passthrough assertions in tests.
    ChatRequest last_request() const;

    static ScriptedEndpoint from_json(const json& script);

private:
    std::vector<ScriptRule> rules_;
    std::string fallback_;
    mutable std::mutex mutex_;
    ChatRequest last_;
};

struct HttpEndpointConfig {
    std::string url;   // chat-completions endpoint
    std::string model;
    std::string auth_token;
    int max_retries = 3;
    std::chrono::milliseconds initial_backoff{500};
    int timeout_seconds = 600;
};

/// Client for the de facto chat-completions shape:
/// {model, messages:[{role:"user", content: prompt}], temperature, ...}.
/// The `thinking` flag is forwarded verbatim as enable_thinking.
class HttpChatEndpoint final : public ChatEndpoint {
public:
    explicit HttpChatEndpoint(HttpEndpointConfig config);
    ChatResponse complete(const ChatRequest& request) override;

private:
    HttpEndpointConfig config_;
};

/// Builds an endpoint from a config object: {"type": "http"|"echo"|"script",
/// ...}. Script rules may live inline under "rules" or in a JSONL file under
/// "script_path". Tokens come from the environment variable named by
/// "auth_env".
std::unique_ptr<ChatEndpoint> endpoint_from_json(const json& config);

} // namespace cds::harness
