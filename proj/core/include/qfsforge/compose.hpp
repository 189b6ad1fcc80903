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

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qfsforge/backend.hpp"

namespace qfsforge {

/// TF-IDF statistics over one document cluster. Term frequency is the raw
/// count; idf(t) = ln(N / df(t)) + 1 with df counted inside the cluster, so
/// every indexed term has df >= 1 and a positive weight.
class TfIdfIndex {
 public:
  explicit TfIdfIndex(std::span<const std::string> documents);

  std::size_t document_count() const noexcept { return term_counts_.size(); }
  std::size_t document_frequency(const std::string& term) const;
  /// 0 for terms outside the cluster vocabulary.
  double idf(const std::string& term) const;

  /// Cosine similarity between each document's tf-idf vector and the
  /// query's. Query terms absent from the cluster carry no weight. A query
  /// with no cluster terms scores every document 0.
  std::vector<double> cosine_scores(std::string_view query) const;

 private:
  // Ordered maps so sums run in term order: documents with the same term
  // multiset get bit-identical scores and tie-break by index.
  std::vector<std::map<std::string, std::size_t>> term_counts_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> df_;
};

/// Document indices by descending TF-IDF cosine score against the query;
/// equal scores keep their input order.
std::vector<std::size_t> rank_documents(std::span<const std::string> documents,
                                        std::string_view query);

/// Percentage of the candidate's tokens whose type occurs in `selected`; 0
/// when nothing is selected yet. Throws InvalidArgument for a candidate with
/// no tokens.
double overlap_pct(std::string_view candidate, std::string_view selected);

/// The query-focused summarizer role: one summary for one (query, document).
class Summarizer {
 public:
  virtual ~Summarizer() = default;
  /// `index` identifies the document within its cluster.
  virtual std::string summarize(std::string_view query, std::string_view document,
                                std::size_t index) = 0;
};

/// Wraps a completion backend. The default prompt is the fine-tuned model's
/// input format; `zero_shot` switches to the instruction-style prompt used
/// with general instruction-following models.
class BackendSummarizer final : public Summarizer {
 public:
  enum class PromptStyle { qfs_input, zero_shot };

  explicit BackendSummarizer(CompletionBackend& backend,
                             CompletionParams params = CompletionParams::summarization_defaults(),
                             PromptStyle style = PromptStyle::qfs_input)
      : backend_(backend), params_(std::move(params)), style_(style) {}

  std::string summarize(std::string_view query, std::string_view document,
                        std::size_t index) override;

 private:
  CompletionBackend& backend_;
  CompletionParams params_;
  PromptStyle style_;
};

enum class OverflowPolicy {
  truncate,  // cut the summary that crosses the budget at the budget
  drop,      // leave it out and stop
};

struct CompositionConfig {
  double overlap_threshold = 50.0;  // percent
  std::size_t token_budget = 250;
  OverflowPolicy overflow = OverflowPolicy::truncate;
  std::size_t parallelism = 1;  // concurrent summarizer calls

  void validate() const;
};

struct RankedCandidate {
  std::size_t doc_index;
  std::string summary;
};

struct Composition {
  std::string summary;
  std::vector<std::size_t> selected_doc_indices;  // in selection order
  bool truncated = false;
  std::size_t tokens = 0;
  std::vector<std::size_t> ranking;
  std::vector<std::string> candidate_summaries;  // by document index
};

/// Greedy selection over candidates already in rank order. The first
/// non-empty candidate is always taken; later ones only when their overlap
/// with everything selected so far is below the threshold. Selection stops
/// once the budget is used up; the candidate that would overflow it is cut
/// or dropped per `config.overflow`.
Composition select_summaries(std::span<const RankedCandidate> candidates,
                             const CompositionConfig& config);

/// Ranks the cluster, summarizes every document, then selects. A summarizer
/// failure aborts the whole composition with an error naming the document
/// index.
Composition compose_summary(std::span<const std::string> documents, std::string_view query,
                            Summarizer& summarizer, const CompositionConfig& config);

struct Cluster {
  std::string cluster_id;
  std::string query;
  std::vector<std::string> documents;
};

/// {"cluster_id", "query", "documents": [str]} per line.
std::vector<Cluster> load_clusters(const std::filesystem::path& path);
void write_clusters(std::span<const Cluster> clusters, const std::filesystem::path& path);

/// {"cluster_id", "summary", "selected_doc_indices", "truncated"}.
std::string composition_json_line(const std::string& cluster_id, const Composition& composition);

}  // namespace qfsforge
