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

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qfsforge/backend.hpp"

namespace qfsforge {

/// Deterministic offline backend.
///
/// Replies come from a script: an ordered list of canned completions keyed by
/// request index (RequestTag::index), where each entry lists one reply per
/// attempt and the last reply repeats for later attempts. Unscripted requests
/// are either synthesized from the prompt and seed or rejected, depending on
/// the fallback. Output depends only on (prompt, tag, seed), so results do not
/// change with the number of workers.
///
/// Script file format (JSON):
///
///   {"seed": 7,
///    "fallback": "synthesize",            // or "error"
///    "completions": [
///      "1. Who won?",                      // request 0, every attempt
///      ["garbage", "1. Why?\n2. How?"],    // request 1, attempt 0 then 1+
///      null,                               // request 2 falls back
///      {"error": "HTTP 500"}               // request 3 fails
///    ]}
///
/// Array entries may mix strings and {"error": ...} objects.
class MockBackend final : public CompletionBackend {
 public:
  struct Reply {
    std::string text;
    bool fail = false;  // throw BackendError(text) instead of answering
  };

  enum class Fallback { synthesize, error };

  struct Script {
    std::uint64_t seed = 0;
    Fallback fallback = Fallback::synthesize;
    std::vector<std::vector<Reply>> completions;
  };

  MockBackend() = default;
  explicit MockBackend(Script script) : script_(std::move(script)) {}

  static Script parse_script(std::string_view json_text);
  static Script load_script(const std::filesystem::path& path);

  std::string complete(std::string_view prompt, const CompletionParams& params,
                       RequestTag tag = {}) override;
  std::string identity() const override;

  std::size_t calls() const noexcept { return calls_.load(); }
  const Script& script() const noexcept { return script_; }

  /// What the mock answers for an unscripted request.
  ///
  /// - "question:\n <q> \n context:\n<d>" and "Summarize by answering the
  ///   following questions:" prompts get the lead of the document (one or two
  ///   sentences, capped at 60 tokens).
  /// - Prompts ending in a numbered summary block followed by a cue line get
  ///   one numbered question per summary line; yes/no questions with a
  ///   "Yes: "/"No: " label when the prompt's example uses them.
  /// - Anything else gets its last non-blank line back as a question.
  static std::string synthesize(std::string_view prompt, std::uint64_t seed);

 private:
  Script script_;
  std::atomic<std::size_t> calls_{0};
};

}  // namespace qfsforge
