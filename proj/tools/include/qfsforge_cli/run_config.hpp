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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qfsforge/annotate.hpp"
#include "qfsforge/backend.hpp"
#include "qfsforge/compose.hpp"
#include "qfsforge/stats.hpp"
#include "qfsforge/unify.hpp"

namespace qfsforge::cli {

enum class BackendKind { mock, live };

struct BackendConfig {
  BackendKind kind = BackendKind::mock;
  std::string endpoint;                  // live only
  std::filesystem::path script;          // mock only; may be empty when a seed is set
  std::optional<std::uint64_t> seed;     // mock only; overrides the script's seed
  int timeout_ms = 60'000;
  CompletionParams annotation_params = CompletionParams::annotation_defaults();
  CompletionParams summary_params = CompletionParams::summarization_defaults();
};

/// Everything a subcommand needs. Loaded from a JSON file; command-line flags
/// are applied on top. Relative paths in the file resolve against the file's
/// directory.
struct RunConfig {
  BackendConfig backend;
  QueryMode mode = QueryMode::wh;
  std::size_t parallelism = 1;
  std::size_t retries = 2;
  FailurePolicy failure_policy = FailurePolicy::retry;
  double failure_ceiling = 0.05;  // annotate fails when more than this share of pairs fail

  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path audit;       // annotate; defaults to <output>.audit.jsonl
  std::filesystem::path references;  // evaluate and the unify ablation

  std::optional<PromptSpec> news_prompt;      // overrides of the built-in one-shot specs
  std::optional<PromptSpec> dialogue_prompt;

  CompositionConfig composition;
  BackendSummarizer::PromptStyle summary_prompt = BackendSummarizer::PromptStyle::qfs_input;

  QueryFormat query_format = QueryFormat::natural;
  NtpMode ntp_mode = NtpMode::occurrence;
  bool recall_headline = false;
  std::string label;  // row label in stats and classify reports

  PromptBook prompt_book() const;
  AnnotateOptions annotate_options() const;
};

/// Parses a configuration document. Throws ConfigError on unknown keys, bad
/// types or out-of-range values.
RunConfig parse_run_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

/// Builds the configured backend. A live backend needs an endpoint and a
/// non-empty QFS_FORGE_API_KEY; a mock needs a script or a seed. Both
/// conditions are checked here, before any request is made.
std::unique_ptr<CompletionBackend> make_backend(const BackendConfig& config);

}  // namespace qfsforge::cli
