#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopbench/errors.hpp"

namespace hopbench::gateway {

struct ChatMessage {
    std::string role;  // system | user | assistant
    std::string content;
};

struct ChatRequest {
    std::string model;
    std::vector<ChatMessage> messages;
    double temperature = 0.4;
    double top_p = 0.9;
    int max_tokens = 2048;

    void validate() const;
    std::string to_wire_json() const;  // chat-completions request body
};

struct ChatUsage {
    int prompt_tokens = 0;
    int completion_tokens = 0;
};

struct ChatResult {
    std::string text;  // first choice content
    ChatUsage usage;
    double latency_ms = 0;
    std::string raw_response;  // verbatim body for transcripts
};

struct ModelSpec {
    std::string name;
    double total_params_b = 0;
    double active_params_b = 0;
    enum class Arch { dense, moe } arch = Arch::dense;

    void validate() const;  // active <= total; dense implies active == total
};

class Backend {
  public:
    virtual ~Backend() = default;
    virtual ChatResult complete(const ChatRequest& request) = 0;
    virtual std::string id() const = 0;
};

// Fixed reply queue for tests; cycles when exhausted.
class ScriptedBackend final : public Backend {
  public:
    explicit ScriptedBackend(std::vector<std::string> replies)
        : replies_(std::move(replies)) {}
    ChatResult complete(const ChatRequest& request) override;
    std::string id() const override { return "scripted"; }
    int calls() const { return calls_; }
    const std::vector<ChatRequest>& requests() const { return requests_; }

  private:
    std::vector<std::string> replies_;
    std::vector<ChatRequest> requests_;
    int calls_ = 0;
    std::mutex mu_;
};

struct RetryPolicy {
    int retries = 3;
    int base_delay_ms = 100;  // doubled per retry
};

// Shared token bucket; acquire() blocks until a token is available.
class TokenBucket {
  public:
    TokenBucket(double capacity, double refill_per_sec,
                std::function<double()> clock = {});
    void acquire();
    bool try_acquire();

  private:
    double capacity_;
    double refill_per_sec_;
    double tokens_;
    double last_;
    std::function<double()> clock_;
    std::mutex mu_;
};

struct HttpBackendConfig {
    std::string base_url;       // e.g. http://localhost:11434 or .../v1
    std::string api_key;        // optional bearer token, never logged
    RetryPolicy retry;
    int timeout_ms = 120000;
    std::optional<double> rate_limit_per_sec;  // token bucket when set
};

// OpenAI-compatible chat-completions client over HTTP.
class HttpBackend final : public Backend {
  public:
    explicit HttpBackend(HttpBackendConfig config);
    ~HttpBackend() override;
    ChatResult complete(const ChatRequest& request) override;
    std::string id() const override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Reads HOPBENCH_BASE_URL / HOPBENCH_API_KEY, falling back to the given URL.
HttpBackendConfig http_config_from_env(const std::string& fallback_base_url = "");

}  // namespace hopbench::gateway
