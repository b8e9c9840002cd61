#pragma once

#include <httplib.h>

#include <string>

#include "menuopt/llm/chat.hpp"

namespace menuopt::llm {

/// cpp-httplib transport. `endpoint` is a base URL such as
/// "https://api.openai.com/v1"; https requires an OpenSSL-enabled build.
class HttplibTransport : public Transport {
 public:
  explicit HttplibTransport(const std::string& endpoint, int timeout_seconds = 120) {
    const auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos) {
      throw ArgumentError("endpoint must include a scheme: '" + endpoint + "'");
    }
    const auto path_start = endpoint.find('/', scheme_end + 3);
    origin_ = endpoint.substr(0, path_start);
    if (path_start != std::string::npos) base_path_ = endpoint.substr(path_start);
    while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
    if (endpoint.starts_with("https://")) {
      throw ArgumentError("this build has no TLS support; use an http:// endpoint");
    }
#endif
    timeout_ = timeout_seconds;
  }

  HttpResponse post(const std::string& path, const std::string& body,
                    const std::map<std::string, std::string>& headers) override {
    httplib::Client client(origin_);
    client.set_connection_timeout(timeout_, 0);
    client.set_read_timeout(timeout_, 0);
    client.set_write_timeout(timeout_, 0);
    httplib::Headers h;
    std::string content_type = "application/json";
    for (const auto& [k, v] : headers) {
      if (k == "Content-Type") {
        content_type = v;
      } else {
        h.emplace(k, v);
      }
    }
    auto res = client.Post(base_path_ + path, h, body, content_type);
    if (!res) {
      throw TransportError("POST " + origin_ + base_path_ + path + " failed: " +
                           httplib::to_string(res.error()));
    }
    return {res->status, res->body};
  }

 private:
  std::string origin_;
  std::string base_path_;
  int timeout_ = 120;
};

}  // namespace menuopt::llm
