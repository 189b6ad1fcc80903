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

#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

#include "qfsforge/backend.hpp"

namespace qfsforge {

/// Completion backend speaking a plain JSON-over-HTTP protocol, one POST per
/// completion:
///
///   request  {"prompt": str, "max_tokens": int, "temperature": num,
///             "top_p": num, "stop": [str]}
///   response {"text": str}
///
/// The auth token goes out as "Authorization: Bearer <token>" and never
/// appears in error messages. HTTP 429, 503 and transport failures are
/// retried after sleeping base, 2*base, 4*base (at most three sleeps); any
/// other non-2xx status fails immediately with the response body attached.
class HttpBackend final : public CompletionBackend {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  struct Options {
    std::string endpoint;  // http://host[:port]/path or https://...
    std::string api_key;
    std::chrono::milliseconds timeout{60'000};
    std::chrono::milliseconds backoff_base{1'000};
    int max_backoff_sleeps = 3;
    Sleeper sleep;  // defaults to std::this_thread::sleep_for
  };

  explicit HttpBackend(Options options);

  std::string complete(std::string_view prompt, const CompletionParams& params,
                       RequestTag tag = {}) override;
  std::string identity() const override;

  /// Request body for the given prompt and params, as sent on the wire.
  static std::string request_body(std::string_view prompt, const CompletionParams& params);

 private:
  Options options_;
  std::string origin_;  // scheme://host:port
  std::string path_;
};

/// Environment variable holding the live backend's auth token.
inline constexpr const char* kApiKeyEnv = "QFS_FORGE_API_KEY";

}  // namespace qfsforge
