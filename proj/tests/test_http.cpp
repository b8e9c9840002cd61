#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "menuopt/llm/http_transport.hpp"
#include "menuopt/llm/scoring.hpp"

using namespace menuopt;
using namespace menuopt::llm;

namespace {

/// Loopback chat server: fails the first `failures` requests with 503,
/// then answers with the bearer token and request body echoed back.
class LocalServer {
 public:
  explicit LocalServer(int failures) : failures_(failures) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      const int n = calls_++;
      last_body_ = req.body;
      if (n < failures_) {
        res.status = 503;
        res.set_content("busy", "text/plain");
        return;
      }
      res.set_content(make_response_body(req.get_header_value("Authorization"), "stop"),
                      "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }

  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
  int calls() const { return calls_; }
  std::string last_body() const { return last_body_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  int failures_;
  std::atomic<int> calls_{0};
  std::string last_body_;
};

ChatRequest sample() {
  ChatRequest r;
  r.model = "m";
  r.messages = {{"user", "hello"}};
  return r;
}

}  // namespace

TEST(HttpTransport, RoundTripWithRetry) {
  LocalServer server(2);
  ClientOptions o;
  o.api_key = "k123";
  o.base_delay = std::chrono::milliseconds(1);
  HttpChatClient client(std::make_shared<HttplibTransport>(server.endpoint(), 5), o);
  const auto r = client.complete(sample());
  EXPECT_EQ(r.content, "Bearer k123");
  EXPECT_EQ(r.attempts, 3u);
  EXPECT_EQ(server.calls(), 3);
  EXPECT_EQ(server.last_body(), request_body(sample()));
}

TEST(HttpTransport, UnreachableIsTransportError) {
  int port;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  HttplibTransport t("http://127.0.0.1:" + std::to_string(port), 2);
  EXPECT_THROW(t.post("/x", "{}", {}), TransportError);
}

TEST(HttpTransport, EndpointValidation) {
  EXPECT_THROW(HttplibTransport("localhost:8080"), ArgumentError);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  EXPECT_THROW(HttplibTransport("https://example.com"), ArgumentError);
#endif
}
