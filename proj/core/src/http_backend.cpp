// Copyright 2026 The qfs-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfsforge/http_backend.hpp"

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "qfsforge/error.hpp"

namespace qfsforge {

using nlohmann::json;

HttpBackend::HttpBackend(Options options) : options_(std::move(options)) {
  const std::string& endpoint = options_.endpoint;
  const std::size_t scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("backend endpoint must start with http:// or https://");
  }
  const std::string scheme = endpoint.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("unsupported endpoint scheme '" + scheme + "'");
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw ConfigError("this build has no TLS support; use an http endpoint");
#endif
  const std::size_t path_begin = endpoint.find('/', scheme_end + 3);
  origin_ = endpoint.substr(0, path_begin);
  path_ = path_begin == std::string::npos ? "/" : endpoint.substr(path_begin);
  if (origin_.size() <= scheme_end + 3) throw ConfigError("backend endpoint has no host");
  if (!options_.sleep) {
    options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

std::string HttpBackend::request_body(std::string_view prompt, const CompletionParams& params) {
  json body;
  body["prompt"] = std::string(prompt);
  body["max_tokens"] = params.max_tokens;
  body["temperature"] = params.temperature;
  body["top_p"] = params.top_p;
  body["stop"] = params.stop_sequences;
  return body.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string HttpBackend::complete(std::string_view prompt, const CompletionParams& params,
                                  RequestTag /*tag*/) {
  params.validate();
  const std::string body = request_body(prompt, params);
  httplib::Headers headers;
  if (!options_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + options_.api_key);
  }

  auto delay = options_.backoff_base;
  for (int sleeps = 0;; ++sleeps) {
    httplib::Client client(origin_);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
        options_.timeout - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());

    auto result = client.Post(path_, headers, body, "application/json");
    const bool transient =
        !result || result->status == 429 || result->status == 503;
    if (transient && sleeps < options_.max_backoff_sleeps) {
      options_.sleep(delay);
      delay *= 2;
      continue;
    }
    if (!result) {
      throw BackendError("request to " + origin_ + path_ +
                         " failed: " + httplib::to_string(result.error()));
    }
    if (result->status < 200 || result->status >= 300) {
      throw BackendError("backend returned HTTP " + std::to_string(result->status),
                         result->status, result->body);
    }
    json reply;
    try {
      reply = json::parse(result->body);
    } catch (const json::parse_error&) {
      throw BackendError("backend response is not JSON", result->status, result->body);
    }
    if (!reply.is_object() || !reply.contains("text") || !reply["text"].is_string()) {
      throw BackendError("backend response lacks a \"text\" string", result->status,
                         result->body);
    }
    return reply["text"].get<std::string>();
  }
}

std::string HttpBackend::identity() const { return "http/1 " + origin_ + path_; }

}  // namespace qfsforge
