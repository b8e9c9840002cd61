#include <gtest/gtest.h>

#include "menuopt/llm/chat.hpp"

using namespace menuopt;
using namespace menuopt::llm;

namespace {

ChatRequest sample_request() {
  ChatRequest r;
  r.model = "m";
  r.messages = {{"user", "hi"}};
  return r;
}

ClientOptions fast(std::size_t retries = 3) {
  ClientOptions o;
  o.api_key = "secret";
  o.max_retries = retries;
  o.base_delay = std::chrono::milliseconds(0);
  return o;
}

}  // namespace

TEST(Chat, RequestBodyIsStable) {
  EXPECT_EQ(request_body(sample_request()),
            R"({"messages":[{"content":"hi","role":"user"}],"model":"m","temperature":0.0})");
  EXPECT_EQ(request_hash(request_body(sample_request())),
            request_hash(request_body(sample_request())));
}

TEST(Chat, MaxTokensSerializedWhenSet) {
  auto r = sample_request();
  r.max_tokens = 7;
  EXPECT_NE(request_body(r).find("\"max_tokens\":7"), std::string::npos);
}

TEST(Chat, ParsesResponse) {
  const auto r = parse_chat_response(make_response_body("4, 5", "stop"));
  EXPECT_EQ(r.content, "4, 5");
  EXPECT_EQ(r.finish_reason, "stop");
}

TEST(Chat, MalformedResponseIsLlmError) {
  EXPECT_THROW(parse_chat_response("{}"), LlmError);
  EXPECT_THROW(parse_chat_response("not json"), LlmError);
}

TEST(Chat, RetriesAfterRateLimit) {
  auto t = std::make_shared<ScriptedTransport>(std::vector<HttpResponse>{
      {429, "slow down"}, {200, make_response_body("ok", "stop")}});
  HttpChatClient client(t, fast());
  const auto r = client.complete(sample_request());
  EXPECT_EQ(r.content, "ok");
  EXPECT_EQ(r.attempts, 2u);
  EXPECT_EQ(t->calls(), 2u);
}

TEST(Chat, PersistentServerErrorFailsAfterRetries) {
  auto t = std::make_shared<ScriptedTransport>(std::vector<HttpResponse>(
      10, HttpResponse{500, "boom"}));
  HttpChatClient client(t, fast(2));
  EXPECT_THROW(client.complete(sample_request()), LlmError);
  EXPECT_EQ(t->calls(), 3u);
}

TEST(Chat, ClientErrorIsNotRetried) {
  auto t = std::make_shared<ScriptedTransport>(std::vector<HttpResponse>{
      {400, "bad request"}, {200, make_response_body("ok", "stop")}});
  HttpChatClient client(t, fast());
  try {
    client.complete(sample_request());
    FAIL();
  } catch (const LlmError& e) {
    EXPECT_NE(std::string(e.what()).find("bad request"), std::string::npos);
  }
  EXPECT_EQ(t->calls(), 1u);
}

TEST(Chat, SendsBearerHeader) {
  auto t = std::make_shared<ScriptedTransport>(
      std::vector<HttpResponse>{{200, make_response_body("ok", "stop")}});
  HttpChatClient client(t, fast());
  client.complete(sample_request());
  EXPECT_EQ(t->last_headers().at("Authorization"), "Bearer secret");
  EXPECT_EQ(t->bodies().front(), request_body(sample_request()));
}

TEST(Chat, EmptyMessagesRejected) {
  auto t = std::make_shared<ScriptedTransport>(std::vector<HttpResponse>{});
  HttpChatClient client(t, fast());
  ChatRequest r;
  r.model = "m";
  EXPECT_THROW(client.complete(r), ArgumentError);
  EXPECT_EQ(t->calls(), 0u);
}

TEST(Chat, RecordThenReplay) {
  auto scripted = std::make_shared<ScriptedTransport>(
      std::vector<HttpResponse>{{200, make_response_body("recorded", "stop")}});
  auto recorder = std::make_shared<RecordingTransport>(scripted);
  HttpChatClient live(recorder, fast());
  live.complete(sample_request());

  const auto transcript = serialize_transcript(recorder->entries());
  auto replay = std::make_shared<ReplayTransport>(parse_transcript(transcript, "t"));
  HttpChatClient offline(replay, fast(0));
  EXPECT_EQ(offline.complete(sample_request()).content, "recorded");

  auto other = sample_request();
  other.messages[0].content = "unseen";
  EXPECT_THROW(offline.complete(other), LlmError);
}

TEST(Chat, FunctionClientRecordsRequests) {
  FunctionChatClient c([](const ChatRequest&, std::size_t i) { return std::to_string(i); });
  EXPECT_EQ(c.complete(sample_request()).content, "0");
  EXPECT_EQ(c.complete(sample_request()).content, "1");
  EXPECT_EQ(c.calls(), 2u);
  EXPECT_EQ(c.requests()[1].model, "m");
}
