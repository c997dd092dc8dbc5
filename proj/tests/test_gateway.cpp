#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "hopbench/gateway.hpp"

using namespace hopbench;
using namespace hopbench::gateway;
using nlohmann::json;

namespace {

ChatRequest simple_request(const std::string& content) {
    ChatRequest r;
    r.model = "test-model";
    r.messages = {{"system", "sys"}, {"user", content}};
    return r;
}

// In-process chat-completions server fixture.
class ServerFixture {
  public:
    ServerFixture() {
        server_.Post("/v1/chat/completions",
                     [this](const httplib::Request& req, httplib::Response& res) {
                         last_body = req.body;
                         if (fail_next > 0) {
                             --fail_next;
                             res.status = 500;
                             return;
                         }
                         if (malformed) {
                             res.set_content("{\"nope\": 1}", "application/json");
                             return;
                         }
                         const json reply = {
                             {"choices",
                              {{{"message", {{"role", "assistant"}, {"content", canned}}}}}},
                             {"usage",
                              {{"prompt_tokens", 11}, {"completion_tokens", 7}}}};
                         res.set_content(reply.dump(), "application/json");
                     });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~ServerFixture() {
        server_.stop();
        thread_.join();
    }

    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

    std::string canned = "X";
    std::string last_body;
    std::atomic<int> fail_next{0};
    bool malformed = false;

  private:
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

HttpBackendConfig fast_config(const std::string& url) {
    HttpBackendConfig cfg;
    cfg.base_url = url;
    cfg.retry = {2, 1};
    cfg.timeout_ms = 2000;
    return cfg;
}

}  // namespace

TEST_CASE("chat request validation") {
    auto r = simple_request("hello");
    CHECK_NOTHROW(r.validate());
    r.temperature = 3.0;
    CHECK_THROWS_AS(r.validate(), ConfigError);
    r.temperature = 0.4;
    r.top_p = 0.0;
    CHECK_THROWS_AS(r.validate(), ConfigError);
    r.top_p = 0.9;
    r.max_tokens = 0;
    CHECK_THROWS_AS(r.validate(), ConfigError);
    r.max_tokens = 10;
    r.messages.push_back({"narrator", "nope"});
    CHECK_THROWS_AS(r.validate(), ConfigError);
}

TEST_CASE("wire JSON carries the exact field names") {
    const auto r = simple_request("hi");
    const json j = json::parse(r.to_wire_json());
    CHECK(j.at("model") == "test-model");
    CHECK(j.at("temperature") == doctest::Approx(0.4));
    CHECK(j.at("top_p") == doctest::Approx(0.9));
    CHECK(j.at("max_tokens") == 2048);
    REQUIRE(j.at("messages").size() == 2);
    CHECK(j["messages"][0].at("role") == "system");
    CHECK(j["messages"][1].at("content") == "hi");
}

TEST_CASE("model spec invariants") {
    ModelSpec dense{"llama", 8, 8, ModelSpec::Arch::dense};
    CHECK_NOTHROW(dense.validate());
    ModelSpec moe{"mix", 47, 12, ModelSpec::Arch::moe};
    CHECK_NOTHROW(moe.validate());
    ModelSpec bad_active{"m", 10, 12, ModelSpec::Arch::moe};
    CHECK_THROWS_AS(bad_active.validate(), ConfigError);
    ModelSpec bad_dense{"m", 10, 8, ModelSpec::Arch::dense};
    CHECK_THROWS_AS(bad_dense.validate(), ConfigError);
}

TEST_CASE("scripted backend echoes canned replies in order") {
    ScriptedBackend b({"X", "Y"});
    CHECK(b.complete(simple_request("a")).text == "X");
    CHECK(b.complete(simple_request("b")).text == "Y");
    CHECK(b.complete(simple_request("c")).text == "X");  // cycles
    CHECK(b.calls() == 3);
    CHECK(b.requests().size() == 3);
}

TEST_CASE("http backend round-trips a conformant response") {
    ServerFixture server;
    HttpBackend backend(fast_config(server.url()));
    const auto res = backend.complete(simple_request("ping"));
    CHECK(res.text == "X");
    CHECK(res.usage.prompt_tokens == 11);
    CHECK(res.usage.completion_tokens == 7);
    CHECK(res.latency_ms > 0);
    // The outbound body is the documented wire shape.
    const json sent = json::parse(server.last_body);
    CHECK(sent.at("model") == "test-model");
    CHECK(sent.at("messages").size() == 2);
}

TEST_CASE("http backend retries transient 5xx and then succeeds") {
    ServerFixture server;
    server.fail_next = 1;
    HttpBackend backend(fast_config(server.url()));
    CHECK(backend.complete(simple_request("ping")).text == "X");
}

TEST_CASE("http backend surfaces protocol errors on malformed bodies") {
    ServerFixture server;
    server.malformed = true;
    HttpBackend backend(fast_config(server.url()));
    CHECK_THROWS_AS(backend.complete(simple_request("ping")), ProtocolError);
}

TEST_CASE("http backend raises transport error when the host is down") {
    HttpBackendConfig cfg = fast_config("http://127.0.0.1:1");
    HttpBackend backend(cfg);
    CHECK_THROWS_AS(backend.complete(simple_request("ping")), TransportError);
}

TEST_CASE("token bucket throttles and refills on its clock") {
    double now = 0.0;
    TokenBucket bucket(2.0, 1.0, [&now] { return now; });
    CHECK(bucket.try_acquire());
    CHECK(bucket.try_acquire());
    CHECK(!bucket.try_acquire());
    now = 0.5;
    CHECK(!bucket.try_acquire());
    now = 1.6;  // one token refilled
    CHECK(bucket.try_acquire());
    CHECK(!bucket.try_acquire());
}

TEST_CASE("env config falls back to the provided URL") {
    const auto cfg = http_config_from_env("http://fallback:1234");
    CHECK(!cfg.base_url.empty());
}
