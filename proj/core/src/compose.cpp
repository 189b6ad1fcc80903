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

#include "qfsforge/compose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

#include "jsonl.hpp"
#include "qfsforge/annotate.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/parallel.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

using nlohmann::json;

TfIdfIndex::TfIdfIndex(std::span<const std::string> documents) {
  term_counts_.reserve(documents.size());
  for (const auto& doc : documents) {
    auto& counts = term_counts_.emplace_back();
    for (auto& token : tokenize(doc)) ++counts[std::move(token)];
    for (const auto& [term, count] : counts) ++df_[term];
  }
  norms_.reserve(term_counts_.size());
  for (const auto& counts : term_counts_) {
    double sq = 0.0;
    for (const auto& [term, count] : counts) {
      const double w = static_cast<double>(count) * idf(term);
      sq += w * w;
    }
    norms_.push_back(std::sqrt(sq));
  }
}

std::size_t TfIdfIndex::document_frequency(const std::string& term) const {
  const auto it = df_.find(term);
  return it == df_.end() ? 0 : it->second;
}

double TfIdfIndex::idf(const std::string& term) const {
  const std::size_t df = document_frequency(term);
  if (df == 0) return 0.0;
  return std::log(static_cast<double>(document_count()) / static_cast<double>(df)) + 1.0;
}

std::vector<double> TfIdfIndex::cosine_scores(std::string_view query) const {
  std::map<std::string, double> query_weights;
  for (auto& token : tokenize(query)) {
    if (df_.contains(token)) query_weights[std::move(token)] += 1.0;
  }
  double query_sq = 0.0;
  for (auto& [term, weight] : query_weights) {
    weight *= idf(term);
    query_sq += weight * weight;
  }
  const double query_norm = std::sqrt(query_sq);

  std::vector<double> scores(term_counts_.size(), 0.0);
  if (query_norm == 0.0) return scores;
  for (std::size_t d = 0; d < term_counts_.size(); ++d) {
    if (norms_[d] == 0.0) continue;
    double dot = 0.0;
    for (const auto& [term, q_weight] : query_weights) {
      const auto it = term_counts_[d].find(term);
      if (it != term_counts_[d].end()) dot += static_cast<double>(it->second) * idf(term) * q_weight;
    }
    scores[d] = dot / (norms_[d] * query_norm);
  }
  return scores;
}

std::vector<std::size_t> rank_documents(std::span<const std::string> documents,
                                        std::string_view query) {
  if (documents.empty()) throw InvalidArgument("rank_documents: empty cluster");
  if (is_blank(query)) throw InvalidArgument("rank_documents: empty query");
  const auto scores = TfIdfIndex(documents).cosine_scores(query);
  std::vector<std::size_t> order(documents.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

double overlap_pct(std::string_view candidate, std::string_view selected) {
  const auto tokens = tokenize(candidate);
  if (tokens.empty()) throw InvalidArgument("overlap_pct: candidate has no tokens");
  const auto selected_tokens = tokenize(selected);
  if (selected_tokens.empty()) return 0.0;
  const std::unordered_set<std::string_view> vocab(selected_tokens.begin(), selected_tokens.end());
  const auto shared = std::count_if(tokens.begin(), tokens.end(),
                                    [&](const std::string& t) { return vocab.contains(t); });
  return 100.0 * static_cast<double>(shared) / static_cast<double>(tokens.size());
}

std::string BackendSummarizer::summarize(std::string_view query, std::string_view document,
                                         std::size_t index) {
  const std::string prompt = style_ == PromptStyle::qfs_input
                                 ? build_qfs_input(query, document)
                                 : zero_shot_summarize_prompt(query, document);
  return std::string(trim(backend_.complete(prompt, params_, {index, 0})));
}

void CompositionConfig::validate() const {
  if (!(overlap_threshold >= 0.0 && overlap_threshold <= 100.0)) {
    throw InvalidArgument("overlap_threshold must be within [0, 100]");
  }
  if (token_budget == 0) throw InvalidArgument("token_budget must be >= 1");
  if (parallelism == 0) throw InvalidArgument("parallelism must be >= 1");
}

Composition select_summaries(std::span<const RankedCandidate> candidates,
                             const CompositionConfig& config) {
  config.validate();
  Composition out;
  for (const auto& candidate : candidates) {
    if (out.tokens >= config.token_budget) break;
    const std::string_view text = trim(candidate.summary);
    const std::size_t tokens = count_tokens(text);
    if (tokens == 0) continue;
    if (!out.selected_doc_indices.empty() &&
        overlap_pct(text, out.summary) >= config.overlap_threshold) {
      continue;
    }

    if (out.tokens + tokens <= config.token_budget) {
      if (!out.summary.empty()) out.summary.push_back(' ');
      out.summary += text;
      out.tokens += tokens;
      out.selected_doc_indices.push_back(candidate.doc_index);
      continue;
    }
    if (config.overflow == OverflowPolicy::truncate) {
      const TruncatedText cut = truncate_to_tokens(text, config.token_budget - out.tokens);
      if (!out.summary.empty()) out.summary.push_back(' ');
      out.summary += cut.text;
      out.tokens += cut.tokens;
      out.selected_doc_indices.push_back(candidate.doc_index);
      out.truncated = true;
    }
    break;
  }
  return out;
}

Composition compose_summary(std::span<const std::string> documents, std::string_view query,
                            Summarizer& summarizer, const CompositionConfig& config) {
  config.validate();
  const auto ranking = rank_documents(documents, query);
  std::vector<std::string> summaries(documents.size());
  parallel_for(documents.size(), config.parallelism, [&](std::size_t i) {
    try {
      summaries[i] = summarizer.summarize(query, documents[i], i);
    } catch (const std::exception& e) {
      throw BackendError("summarizing document " + std::to_string(i) + " failed: " + e.what());
    }
  });

  std::vector<RankedCandidate> ranked;
  ranked.reserve(ranking.size());
  for (std::size_t index : ranking) ranked.push_back({index, summaries[index]});
  Composition out = select_summaries(ranked, config);
  out.ranking = ranking;
  out.candidate_summaries = std::move(summaries);
  return out;
}

std::vector<Cluster> load_clusters(const std::filesystem::path& path) {
  std::vector<Cluster> clusters;
  std::unordered_set<std::string> seen;
  jsonl::for_each_record(path, [&](const json& record, std::size_t line) {
    Cluster cluster;
    cluster.cluster_id = jsonl::required_string(record, "cluster_id", path, line);
    cluster.query = jsonl::required_string(record, "query", path, line);
    cluster.documents = jsonl::required_string_array(record, "documents", path, line);
    if (cluster.documents.empty()) throw FormatError(path.string(), line, "cluster has no documents");
    if (is_blank(cluster.query)) throw FormatError(path.string(), line, "cluster query is blank");
    if (!seen.insert(cluster.cluster_id).second) throw DuplicateIdError(cluster.cluster_id);
    clusters.push_back(std::move(cluster));
  });
  return clusters;
}

void write_clusters(std::span<const Cluster> clusters, const std::filesystem::path& path) {
  std::string payload;
  for (const auto& cluster : clusters) {
    nlohmann::ordered_json record;
    record["cluster_id"] = cluster.cluster_id;
    record["query"] = cluster.query;
    record["documents"] = cluster.documents;
    payload += record.dump() + "\n";
  }
  jsonl::write_file(path, payload);
}

std::string composition_json_line(const std::string& cluster_id, const Composition& composition) {
  nlohmann::ordered_json record;
  record["cluster_id"] = cluster_id;
  record["summary"] = composition.summary;
  record["selected_doc_indices"] = composition.selected_doc_indices;
  record["truncated"] = composition.truncated;
  return record.dump();
}

}  // namespace qfsforge
