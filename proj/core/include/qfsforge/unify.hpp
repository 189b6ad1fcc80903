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

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfsforge/backend.hpp"
#include "qfsforge/compose.hpp"
#include "qfsforge/promptgen.hpp"
#include "qfsforge/rouge.hpp"

namespace qfsforge {

/// The query-generator role: given a document and a pseudo-summary, produce
/// the query that summary answers.
class GeneratorBackend {
 public:
  virtual ~GeneratorBackend() = default;
  /// `index` identifies the item within a batch, for deterministic mocks.
  virtual std::string generate_query(std::string_view document, std::string_view pseudo_summary,
                                     std::size_t index) = 0;
};

/// Fills the generator role with a completion backend by running the
/// annotation prompt on the raw query as if it were the summary.
class CompletionQueryGenerator final : public GeneratorBackend {
 public:
  explicit CompletionQueryGenerator(
      CompletionBackend& backend,
      PromptSpec spec = default_prompt_spec(Domain::news, QueryMode::wh),
      CompletionParams params = CompletionParams::annotation_defaults());

  std::string generate_query(std::string_view document, std::string_view pseudo_summary,
                             std::size_t index) override;

 private:
  CompletionBackend& backend_;
  PromptSpec spec_;
  CompletionParams params_;
};

/// Adapts a plain callable; handy for tests and for in-process generators.
class FunctionGenerator final : public GeneratorBackend {
 public:
  using Fn = std::function<std::string(std::string_view document, std::string_view pseudo_summary)>;
  explicit FunctionGenerator(Fn fn) : fn_(std::move(fn)) {}

  std::string generate_query(std::string_view document, std::string_view pseudo_summary,
                             std::size_t) override {
    return fn_(document, pseudo_summary);
  }

 private:
  Fn fn_;
};

/// q' = gen(document, raw_query). Numbered output is split into one question
/// per line; anything else is kept as generated, trimmed. Throws
/// InvalidArgument for blank inputs and Error for a blank generation.
std::string unify_query(std::string_view document, std::string_view raw_query,
                        GeneratorBackend& generator, std::size_t index = 0);

enum class TemplateStyle { newts, duc };

TemplateStyle parse_template_style(std::string_view text);

/// Hand-written rewrite used as the ablation baseline.
///   newts: "What does the article say about <raw>?"
///   duc:   leading Describe/Identify/Discuss becomes What is/What are/What
///          about and a final '.' becomes '?'.
std::string template_fallback(std::string_view raw_query, TemplateStyle style);

/// How a dataset phrases its queries. Only `natural` skips unification.
enum class QueryFormat { natural, words, phrases, sentence, instruction };

std::string_view to_string(QueryFormat format);
QueryFormat parse_query_format(std::string_view text);
inline bool needs_unification(QueryFormat format) { return format != QueryFormat::natural; }

struct UnifyItem {
  std::string id;
  std::string document;
  std::string query;
};

/// {"id", "document", "query"} per line.
std::vector<UnifyItem> load_unify_items(const std::filesystem::path& path);

struct UnifiedQuery {
  std::string id;
  std::string raw_query;
  std::string query;
};

/// Unifies a batch with bounded parallelism; results keep input order.
/// Natural-question inputs pass through untouched.
std::vector<UnifiedQuery> unify_batch(std::span<const UnifyItem> items, QueryFormat format,
                                      GeneratorBackend& generator, std::size_t parallelism = 1);

/// {"id", "raw_query", "query"}.
std::string unified_json_line(const UnifiedQuery& item);

struct AblationItem {
  std::string id;
  std::string document;
  std::string raw_query;
  std::vector<std::string> references;
};

struct AblationRow {
  std::string id;
  std::string generated_query;
  std::string template_query;
  RougeTriple generated;
  RougeTriple templated;
};

struct AblationReport {
  std::vector<AblationRow> rows;
  RougeTriple generated_mean;
  RougeTriple template_mean;
  // Mean of per-item (generated - template) F1 for ROUGE-1, -2 and -L.
  std::array<double, 3> f1_delta{};
};

/// Summarizes each document twice, once with the generated question and once
/// with the template rewrite, and scores both against the references.
AblationReport run_unification_ablation(std::span<const AblationItem> items,
                                        TemplateStyle style, GeneratorBackend& generator,
                                        Summarizer& summarizer, std::size_t parallelism = 1);

}  // namespace qfsforge
