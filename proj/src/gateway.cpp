#include "hopbench/gateway.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace hopbench::gateway {

using nlohmann::json;

void ChatRequest::validate() const {
    if (temperature < 0.0 || temperature > 2.0)
        throw ConfigError("temperature must be in [0,2]");
    if (top_p <= 0.0 || top_p > 1.0) throw ConfigError("top_p must be in (0,1]");
    if (max_tokens <= 0) throw ConfigError("max_tokens must be positive");
    for (const auto& m : messages)
        if (m.role != "system" && m.role != "user" && m.role != "assistant")
            throw ConfigError("bad message role: " + m.role);
}

std::string ChatRequest::to_wire_json() const {
    json msgs = json::array();
    for (const auto& m : messages) msgs.push_back({{"role", m.role}, {"content", m.content}});
    const json body = {
        {"model", model},         {"messages", msgs},       {"temperature", temperature},
        {"top_p", top_p},         {"max_tokens", max_tokens},
    };
    return body.dump();
}

void ModelSpec::validate() const {
    if (name.empty()) throw ConfigError("model name empty");
    if (total_params_b <= 0 || active_params_b <= 0)
        throw ConfigError("parameter counts must be positive");
    if (active_params_b > total_params_b)
        throw ConfigError("active parameters exceed total");
    if (arch == Arch::dense && active_params_b != total_params_b)
        throw ConfigError("dense architecture requires active == total");
}

ChatResult ScriptedBackend::complete(const ChatRequest& request) {
    request.validate();
    std::lock_guard lock(mu_);
    requests_.push_back(request);
    ChatResult r;
    if (replies_.empty()) throw TransportError("scripted backend has no replies");
    r.text = replies_[static_cast<std::size_t>(calls_) % replies_.size()];
    ++calls_;
    r.raw_response = r.text;
    return r;
}

namespace {

double steady_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

TokenBucket::TokenBucket(double capacity, double refill_per_sec,
                         std::function<double()> clock)
    : capacity_(capacity),
      refill_per_sec_(refill_per_sec),
      tokens_(capacity),
      clock_(clock ? std::move(clock) : steady_seconds) {
    last_ = clock_();
}

bool TokenBucket::try_acquire() {
    std::lock_guard lock(mu_);
    const double now = clock_();
    tokens_ = std::min(capacity_, tokens_ + (now - last_) * refill_per_sec_);
    last_ = now;
    if (tokens_ >= 1.0) {
        tokens_ -= 1.0;
        return true;
    }
    return false;
}

void TokenBucket::acquire() {
    while (!try_acquire())
        std::this_thread::sleep_for(std::chrono::milliseconds(1));
}

struct HttpBackend::Impl {
    HttpBackendConfig config;
    std::string host_port;
    std::string path_prefix;
    std::unique_ptr<TokenBucket> bucket;
};

namespace {

// Splits "http://host:port/prefix" into client target and path prefix.
void split_url(const std::string& url, std::string& host_port, std::string& prefix) {
    auto scheme = url.find("://");
    const std::size_t start = scheme == std::string::npos ? 0 : scheme + 3;
    const auto slash = url.find('/', start);
    if (slash == std::string::npos) {
        host_port = url;
        prefix.clear();
    } else {
        host_port = url.substr(0, slash);
        prefix = url.substr(slash);
        while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    }
}

}  // namespace

HttpBackend::HttpBackend(HttpBackendConfig config) : impl_(std::make_unique<Impl>()) {
    if (config.base_url.empty()) throw ConfigError("backend base URL empty");
    impl_->config = std::move(config);
    split_url(impl_->config.base_url, impl_->host_port, impl_->path_prefix);
    if (impl_->config.rate_limit_per_sec)
        impl_->bucket = std::make_unique<TokenBucket>(
            std::max(1.0, *impl_->config.rate_limit_per_sec),
            *impl_->config.rate_limit_per_sec);
}

HttpBackend::~HttpBackend() = default;

std::string HttpBackend::id() const { return "http:" + impl_->config.base_url; }

ChatResult HttpBackend::complete(const ChatRequest& request) {
    request.validate();
    if (impl_->bucket) impl_->bucket->acquire();

    const std::string body = request.to_wire_json();
    const std::string path = impl_->path_prefix + "/v1/chat/completions";
    const auto& retry = impl_->config.retry;

    std::string last_error;
    bool timed_out = false;
    for (int attempt = 0; attempt <= retry.retries; ++attempt) {
        if (attempt > 0) {
            const int delay = retry.base_delay_ms * (1 << (attempt - 1));
            std::this_thread::sleep_for(std::chrono::milliseconds(delay));
        }
        httplib::Client client(impl_->host_port);
        client.set_connection_timeout(0, impl_->config.timeout_ms * 1000);
        client.set_read_timeout(impl_->config.timeout_ms / 1000,
                                (impl_->config.timeout_ms % 1000) * 1000);
        httplib::Headers headers;
        if (!impl_->config.api_key.empty())
            headers.emplace("Authorization", "Bearer " + impl_->config.api_key);

        const auto t0 = std::chrono::steady_clock::now();
        auto res = client.Post(path, headers, body, "application/json");
        const auto t1 = std::chrono::steady_clock::now();

        if (!res) {
            const auto err = res.error();
            timed_out = err == httplib::Error::ConnectionTimeout ||
                        err == httplib::Error::Read || err == httplib::Error::Write;
            last_error = httplib::to_string(err);
            continue;  // transport-level: retry
        }
        if (res->status >= 500) {
            timed_out = false;
            last_error = "HTTP " + std::to_string(res->status);
            continue;  // server-side: retry
        }
        if (res->status != 200)
            throw ProtocolError("chat backend returned HTTP " +
                                std::to_string(res->status));

        ChatResult out;
        out.latency_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        out.raw_response = res->body;
        try {
            const json j = json::parse(res->body);
            out.text = j.at("choices").at(0).at("message").at("content").get<std::string>();
            if (j.contains("usage")) {
                out.usage.prompt_tokens = j["usage"].value("prompt_tokens", 0);
                out.usage.completion_tokens = j["usage"].value("completion_tokens", 0);
            }
        } catch (const json::exception& e) {
            throw ProtocolError(std::string("malformed chat response: ") + e.what());
        }
        return out;
    }
    if (timed_out) throw TimeoutError("chat request timed out: " + last_error);
    throw TransportError("chat backend unreachable after " +
                         std::to_string(retry.retries) + " retries: " + last_error);
}

HttpBackendConfig http_config_from_env(const std::string& fallback_base_url) {
    HttpBackendConfig cfg;
    const char* url = std::getenv("HOPBENCH_BASE_URL");
    cfg.base_url = url && *url ? url : fallback_base_url;
    if (const char* key = std::getenv("HOPBENCH_API_KEY")) cfg.api_key = key;
    return cfg;
}

}  // namespace hopbench::gateway
