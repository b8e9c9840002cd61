#pragma once

// OpenAI-compatible chat-completion client over a pluggable transport, plus
// replay and scripted transports for offline use.

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "menuopt/errors.hpp"
#include "menuopt/io.hpp"
#include "menuopt/text.hpp"

namespace menuopt::llm {

using json = nlohmann::json;

struct ChatMessage {
  std::string role;
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  std::optional<int> max_tokens;
};

struct Usage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  std::int64_t total_tokens = 0;
};

struct ChatResponse {
  std::string content;
  std::string finish_reason;
  Usage usage;
  std::size_t attempts = 1;
};

inline json to_json(const ChatRequest& r) {
  json j = json::object();
  j["model"] = r.model;
  j["temperature"] = r.temperature;
  if (r.max_tokens) j["max_tokens"] = *r.max_tokens;
  json msgs = json::array();
  for (const auto& m : r.messages) {
    msgs.push_back({{"role", m.role}, {"content", m.content}});
  }
  j["messages"] = std::move(msgs);
  return j;
}

/// Canonical wire body. Object keys are sorted, so equal requests give
/// equal bytes.
inline std::string request_body(const ChatRequest& r) { return to_json(r).dump(); }

/// Transcript key for a request body.
inline std::string request_hash(std::string_view body) {
  return text::hex64(text::fnv1a64(body));
}

inline ChatResponse parse_chat_response(std::string_view body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw LlmError(std::string("malformed response JSON: ") + e.what());
  }
  try {
    const auto& choice = j.at("choices").at(0);
    ChatResponse r;
    const auto& content = choice.at("message").at("content");
    r.content = content.is_null() ? "" : content.get<std::string>();
    if (choice.contains("finish_reason") && choice["finish_reason"].is_string()) {
      r.finish_reason = choice["finish_reason"].get<std::string>();
    }
    if (j.contains("usage") && j["usage"].is_object()) {
      const auto& u = j["usage"];
      r.usage.prompt_tokens = u.value("prompt_tokens", std::int64_t{0});
      r.usage.completion_tokens = u.value("completion_tokens", std::int64_t{0});
      r.usage.total_tokens = u.value("total_tokens", std::int64_t{0});
    }
    return r;
  } catch (const json::exception& e) {
    throw LlmError(std::string("unexpected response shape: ") + e.what());
  }
}

/// Response body in the wire format, for mocks and fixtures.
inline std::string make_response_body(std::string_view content,
                                      std::string_view finish_reason = "stop") {
  json j;
  j["choices"] = json::array(
      {{{"index", 0},
        {"message", {{"role", "assistant"}, {"content", std::string(content)}}},
        {"finish_reason", std::string(finish_reason)}}});
  return j.dump();
}

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// Failure below HTTP (connection refused, timeout).
class TransportError : public LlmError {
 public:
  using LlmError::LlmError;
};

class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse post(const std::string& path, const std::string& body,
                            const std::map<std::string, std::string>& headers) = 0;
};

class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

inline ChatResponse chat_complete(ChatClient& client, const ChatRequest& request) {
  return client.complete(request);
}

struct ClientOptions {
  std::string path = "/chat/completions";
  std::string api_key;
  /// Retries after the first attempt.
  std::size_t max_retries = 3;
  std::chrono::milliseconds base_delay{500};
};

/// Retries transport failures, 429 and 5xx with exponential backoff. Other
/// non-2xx statuses fail immediately with the body in the message.
class HttpChatClient : public ChatClient {
 public:
  HttpChatClient(std::shared_ptr<Transport> transport, ClientOptions options)
      : transport_(std::move(transport)), options_(std::move(options)) {}

  ChatResponse complete(const ChatRequest& request) override {
    if (request.messages.empty()) {
      throw ArgumentError("chat request has no messages");
    }
    const auto body = request_body(request);
    std::map<std::string, std::string> headers{
        {"Content-Type", "application/json"}};
    if (!options_.api_key.empty()) {
      headers["Authorization"] = "Bearer " + options_.api_key;
    }
    std::string last_error;
    const std::size_t attempts = options_.max_retries + 1;
    for (std::size_t attempt = 1; attempt <= attempts; ++attempt) {
      if (attempt > 1) {
        std::this_thread::sleep_for(options_.base_delay * (1LL << (attempt - 2)));
      }
      HttpResponse res;
      try {
        res = transport_->post(options_.path, body, headers);
      } catch (const TransportError& e) {
        last_error = e.what();
        continue;
      }
      if (res.status >= 200 && res.status < 300) {
        auto parsed = parse_chat_response(res.body);
        parsed.attempts = attempt;
        return parsed;
      }
      last_error = "HTTP " + std::to_string(res.status) + ": " + res.body;
      if (res.status != 429 && res.status < 500) throw LlmError(last_error);
    }
    throw LlmError("request failed after " + std::to_string(attempts) +
                   " attempts: " + last_error);
  }

 private:
  std::shared_ptr<Transport> transport_;
  ClientOptions options_;
};

/// Serves recorded response bodies keyed by request_hash(body).
class ReplayTransport : public Transport {
 public:
  explicit ReplayTransport(std::map<std::string, std::string> responses)
      : responses_(std::move(responses)) {}

  HttpResponse post(const std::string&, const std::string& body,
                    const std::map<std::string, std::string>&) override {
    const auto key = request_hash(body);
    auto it = responses_.find(key);
    if (it == responses_.end()) {
      throw LlmError("no recorded response for request " + key);
    }
    return {200, it->second};
  }

 private:
  std::map<std::string, std::string> responses_;
};

/// Transcript file: JSON array of {request_hash, response_body}.
inline std::map<std::string, std::string> parse_transcript(std::string_view content,
                                                           const std::string& source) {
  const auto j = io::parse_json(content, source);
  if (!j.is_array()) throw ParseError(source + ": transcript must be an array");
  std::map<std::string, std::string> out;
  for (const auto& e : j) {
    try {
      out[e.at("request_hash").get<std::string>()] =
          e.at("response_body").get<std::string>();
    } catch (const json::exception& ex) {
      throw ParseError(source + ": " + ex.what());
    }
  }
  return out;
}

inline std::string serialize_transcript(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  json arr = json::array();
  for (const auto& [hash, body] : entries) {
    arr.push_back({{"request_hash", hash}, {"response_body", body}});
  }
  return arr.dump(2) + "\n";
}

/// Forwards to another transport and records each exchange.
class RecordingTransport : public Transport {
 public:
  explicit RecordingTransport(std::shared_ptr<Transport> inner)
      : inner_(std::move(inner)) {}

  HttpResponse post(const std::string& path, const std::string& body,
                    const std::map<std::string, std::string>& headers) override {
    auto res = inner_->post(path, body, headers);
    if (res.status >= 200 && res.status < 300) {
      std::lock_guard lock(mu_);
      entries_.emplace_back(request_hash(body), res.body);
    }
    return res;
  }

  std::vector<std::pair<std::string, std::string>> entries() const {
    std::lock_guard lock(mu_);
    return entries_;
  }

 private:
  std::shared_ptr<Transport> inner_;
  mutable std::mutex mu_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Returns queued responses in order and counts calls.
class ScriptedTransport : public Transport {
 public:
  explicit ScriptedTransport(std::vector<HttpResponse> script)
      : script_(std::move(script)) {}

  HttpResponse post(const std::string&, const std::string& body,
                    const std::map<std::string, std::string>& headers) override {
    std::lock_guard lock(mu_);
    bodies_.push_back(body);
    last_headers_ = headers;
    if (calls_ >= script_.size()) throw TransportError("script exhausted");
    return script_[calls_++];
  }

  std::size_t calls() const {
    std::lock_guard lock(mu_);
    return calls_;
  }
  std::vector<std::string> bodies() const {
    std::lock_guard lock(mu_);
    return bodies_;
  }
  std::map<std::string, std::string> last_headers() const {
    std::lock_guard lock(mu_);
    return last_headers_;
  }

 private:
  std::vector<HttpResponse> script_;
  mutable std::mutex mu_;
  std::size_t calls_ = 0;
  std::vector<std::string> bodies_;
  std::map<std::string, std::string> last_headers_;
};

/// Chat client backed by a function; records every request.
class FunctionChatClient : public ChatClient {
 public:
  using Handler = std::function<std::string(const ChatRequest&, std::size_t call)>;

  explicit FunctionChatClient(Handler handler) : handler_(std::move(handler)) {}

  ChatResponse complete(const ChatRequest& request) override {
    std::size_t call;
    {
      std::lock_guard lock(mu_);
      call = requests_.size();
      requests_.push_back(request);
    }
    ChatResponse r;
    r.content = handler_(request, call);
    r.finish_reason = "stop";
    return r;
  }

  std::size_t calls() const {
    std::lock_guard lock(mu_);
    return requests_.size();
  }
  std::vector<ChatRequest> requests() const {
    std::lock_guard lock(mu_);
    return requests_;
  }

 private:
  Handler handler_;
  mutable std::mutex mu_;
  std::vector<ChatRequest> requests_;
};

}  // namespace menuopt::llm
