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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfsforge/backend.hpp"
#include "qfsforge/corpus.hpp"
#include "qfsforge/promptgen.hpp"

namespace qfsforge {

inline constexpr std::string_view kQfsQueryPrefix = "question:\n ";
inline constexpr std::string_view kQfsContextPrefix = " \n context:\n";
inline constexpr std::string_view kZeroShotInstruction =
    "Summarize by answering the following questions:";

/// Input string for a query-focused summarizer:
/// "question:\n <query> \n context:\n<document>". Both arguments are copied
/// verbatim. Throws InvalidArgument if either is blank.
std::string build_qfs_input(std::string_view query, std::string_view document);

/// "<zero-shot instruction>\n<query>\n<document>". Applying it to its own
/// output nests rather than being idempotent.
std::string zero_shot_summarize_prompt(std::string_view query, std::string_view document);

/// Trims the query and makes it end with '?', replacing a trailing '.', '!',
/// ',', ';' or ':' if present.
std::string normalize_query(std::string_view query);

/// Extracts exactly `expected_count` numbered queries ("1. ...", "2. ...")
/// from a completion. Lines without a list index are ignored. In yes/no mode a
/// leading "Yes:" or "No:" answer label is dropped. Queries come back
/// normalized.
///
/// Throws ParseMismatch when the indices are not 1..k in order or k differs
/// from `expected_count`; InvalidArgument when `expected_count` is 0.
std::vector<std::string> parse_completion(std::string_view completion, std::size_t expected_count,
                                          QueryMode mode);

/// Lenient variant: the longest run of numbered lines that starts at 1 and
/// counts up without gaps. Later lines are ignored. May return an empty list.
std::vector<std::string> parse_numbered_prefix(std::string_view completion, QueryMode mode);

enum class AnnotationStatus { ok, parse_mismatch, backend_error };

std::string_view to_string(AnnotationStatus status);

/// What to do with completions that do not hold one query per summary
/// sentence.
enum class FailurePolicy {
  drop,    // no retries; failed items are left out of the triplet file
  retry,   // retry up to `retries` times, then drop
  repair,  // retry, then accept the first N numbered queries if at least N exist
};

FailurePolicy parse_failure_policy(std::string_view text);

struct AnnotateOptions {
  std::size_t retries = 2;
  FailurePolicy policy = FailurePolicy::retry;
  CompletionParams params = CompletionParams::annotation_defaults();
};

struct AnnotationOutcome {
  std::string id;
  AnnotationStatus status = AnnotationStatus::backend_error;
  std::optional<AnnotatedTriplet> triplet;  // present iff status == ok
  std::size_t attempts = 0;
  std::string raw_completion;  // last completion received, kept for audit
  std::string error;           // last failure message, empty on a clean success
  bool repaired = false;
};

/// Prompt specs per domain, so mixed news/dialogue corpora each get their own
/// one-shot example.
struct PromptBook {
  PromptSpec news;
  PromptSpec dialogue;

  static PromptBook defaults(QueryMode mode);
  const PromptSpec& for_domain(Domain domain) const {
    return domain == Domain::news ? news : dialogue;
  }
};

/// Prompts the backend for one pair's queries, retrying per `options`.
/// `index` is forwarded to the backend as RequestTag::index. Throws
/// InvalidArgument for a domain mismatch between pair and spec.
AnnotationOutcome annotate_pair(const DocumentSummaryPair& pair, const PromptSpec& spec,
                                CompletionBackend& backend, const AnnotateOptions& options = {},
                                std::size_t index = 0);

struct AnnotationCounts {
  std::size_t ok = 0;
  std::size_t parse_mismatch = 0;
  std::size_t backend_error = 0;

  std::size_t total() const { return ok + parse_mismatch + backend_error; }
  double failure_rate() const {
    return total() ? static_cast<double>(parse_mismatch + backend_error) /
                         static_cast<double>(total())
                   : 0.0;
  }
};

struct AnnotationRun {
  std::vector<AnnotationOutcome> outcomes;  // input order
  AnnotationCounts counts;

  std::vector<AnnotatedTriplet> triplets() const;
};

/// Annotates every pair with up to `parallelism` requests in flight. Outcomes
/// are in input order whatever order the requests finish in.
AnnotationRun annotate_corpus(std::span<const DocumentSummaryPair> pairs, const PromptBook& prompts,
                              CompletionBackend& backend, const AnnotateOptions& options = {},
                              std::size_t parallelism = 1);

/// {"id", "status", "attempts", "error", "raw_completion"} as one JSON line.
std::string audit_json_line(const AnnotationOutcome& outcome);

}  // namespace qfsforge
