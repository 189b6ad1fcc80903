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

#include "qfsforge/annotate.hpp"

#include <json.hpp>

#include "qfsforge/error.hpp"
#include "qfsforge/parallel.hpp"
#include "qfsforge/taxonomy.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

std::string build_qfs_input(std::string_view query, std::string_view document) {
  if (is_blank(query)) throw InvalidArgument("build_qfs_input: empty query");
  if (is_blank(document)) throw InvalidArgument("build_qfs_input: empty document");
  std::string out;
  out.reserve(kQfsQueryPrefix.size() + query.size() + kQfsContextPrefix.size() + document.size());
  out += kQfsQueryPrefix;
  out += query;
  out += kQfsContextPrefix;
  out += document;
  return out;
}

std::string zero_shot_summarize_prompt(std::string_view query, std::string_view document) {
  if (is_blank(query)) throw InvalidArgument("zero_shot_summarize_prompt: empty query");
  if (is_blank(document)) throw InvalidArgument("zero_shot_summarize_prompt: empty document");
  std::string out(kZeroShotInstruction);
  out += '\n';
  out += query;
  out += '\n';
  out += document;
  return out;
}

std::string normalize_query(std::string_view query) {
  std::string out(trim(query));
  if (out.empty() || out.back() == '?') return out;
  while (!out.empty() && (out.back() == '.' || out.back() == '!' || out.back() == ',' ||
                          out.back() == ';' || out.back() == ':')) {
    out.pop_back();
  }
  out = std::string(trim(out));
  out.push_back('?');
  return out;
}

namespace {

struct NumberedLine {
  std::size_t number;
  std::string text;
};

bool starts_with_label(std::string_view text, std::string_view label) {
  if (text.size() < label.size()) return false;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const char a = text[i];
    const char b = label[i];
    if (a != b && !(a >= 'A' && a <= 'Z' && a + 32 == b)) return false;
  }
  return true;
}

std::string strip_answer_label(std::string_view text) {
  for (std::string_view label : {std::string_view("yes:"), std::string_view("no:")}) {
    if (starts_with_label(text, label)) return std::string(trim(text.substr(label.size())));
  }
  return std::string(text);
}

// Lines of the form <ws>* <digits> "." <rest>; other lines are skipped.
std::vector<NumberedLine> numbered_lines(std::string_view completion, QueryMode mode) {
  std::vector<NumberedLine> lines;
  std::size_t begin = 0;
  while (begin <= completion.size()) {
    std::size_t end = completion.find('\n', begin);
    if (end == std::string_view::npos) end = completion.size();
    const std::string_view line = trim(completion.substr(begin, end - begin));
    begin = end + 1;

    std::size_t pos = 0;
    std::size_t number = 0;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9' && pos < 9) {
      number = number * 10 + static_cast<std::size_t>(line[pos] - '0');
      ++pos;
    }
    if (pos == 0 || pos >= line.size() || line[pos] != '.') continue;
    // "3.5 million" is not a list index.
    if (pos + 1 < line.size() && line[pos + 1] >= '0' && line[pos + 1] <= '9') continue;
    std::string text(trim(line.substr(pos + 1)));
    if (mode == QueryMode::yesno) text = strip_answer_label(text);
    lines.push_back({number, normalize_query(text)});
  }
  return lines;
}

}  // namespace

std::vector<std::string> parse_completion(std::string_view completion, std::size_t expected_count,
                                          QueryMode mode) {
  if (expected_count == 0) throw InvalidArgument("parse_completion: expected_count must be >= 1");
  const auto lines = numbered_lines(completion, mode);
  std::vector<std::string> queries;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].number != i + 1) {
      throw ParseMismatch("numbering is not contiguous: expected " + std::to_string(i + 1) +
                          ", found " + std::to_string(lines[i].number));
    }
    if (lines[i].text.empty() || lines[i].text == "?") {
      throw ParseMismatch("query " + std::to_string(i + 1) + " is empty");
    }
    queries.push_back(lines[i].text);
  }
  if (queries.size() != expected_count) {
    throw ParseMismatch("expected " + std::to_string(expected_count) + " queries, found " +
                        std::to_string(queries.size()));
  }
  return queries;
}

std::vector<std::string> parse_numbered_prefix(std::string_view completion, QueryMode mode) {
  std::vector<std::string> queries;
  for (auto& line : numbered_lines(completion, mode)) {
    if (line.number != queries.size() + 1 || line.text.empty() || line.text == "?") break;
    queries.push_back(std::move(line.text));
  }
  return queries;
}

std::string_view to_string(AnnotationStatus status) {
  switch (status) {
    case AnnotationStatus::ok:
      return "ok";
    case AnnotationStatus::parse_mismatch:
      return "parse_mismatch";
    case AnnotationStatus::backend_error:
      return "backend_error";
  }
  return "unknown";
}

FailurePolicy parse_failure_policy(std::string_view text) {
  if (text == "drop") return FailurePolicy::drop;
  if (text == "retry") return FailurePolicy::retry;
  if (text == "repair") return FailurePolicy::repair;
  throw InvalidArgument("unknown failure policy '" + std::string(text) +
                        "' (expected drop, retry or repair)");
}

PromptBook PromptBook::defaults(QueryMode mode) {
  return {default_prompt_spec(Domain::news, mode), default_prompt_spec(Domain::dialogue, mode)};
}

namespace {

AnnotatedTriplet make_triplet(const DocumentSummaryPair& pair, QueryMode mode,
                              std::vector<std::string> queries) {
  AnnotatedTriplet triplet;
  triplet.id = pair.id;
  triplet.document = pair.document;
  triplet.summary = pair.summary;
  triplet.mode = mode;
  triplet.queries = std::move(queries);
  for (const auto& query : triplet.queries) triplet.query_types.push_back(classify_query(query));
  return triplet;
}

}  // namespace

AnnotationOutcome annotate_pair(const DocumentSummaryPair& pair, const PromptSpec& spec,
                                CompletionBackend& backend, const AnnotateOptions& options,
                                std::size_t index) {
  options.params.validate();
  const AnnotationPrompt prompt = build_annotation_prompt(pair, spec);
  const std::size_t max_attempts =
      options.policy == FailurePolicy::drop ? 1 : options.retries + 1;

  AnnotationOutcome outcome;
  outcome.id = pair.id;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    outcome.attempts = attempt + 1;
    try {
      outcome.raw_completion = backend.complete(prompt.text, options.params, {index, attempt});
    } catch (const BackendError& e) {
      outcome.status = AnnotationStatus::backend_error;
      outcome.raw_completion = e.body();
      outcome.error = e.what();
      continue;
    }
    try {
      auto queries = parse_completion(outcome.raw_completion, prompt.expected_queries, spec.mode());
      outcome.triplet = make_triplet(pair, spec.mode(), std::move(queries));
      outcome.status = AnnotationStatus::ok;
      outcome.error.clear();
      return outcome;
    } catch (const ParseMismatch& e) {
      outcome.status = AnnotationStatus::parse_mismatch;
      outcome.error = e.what();
    }
  }

  if (options.policy == FailurePolicy::repair && outcome.status == AnnotationStatus::parse_mismatch) {
    auto queries = parse_numbered_prefix(outcome.raw_completion, spec.mode());
    if (queries.size() >= prompt.expected_queries) {
      queries.resize(prompt.expected_queries);
      outcome.triplet = make_triplet(pair, spec.mode(), std::move(queries));
      outcome.status = AnnotationStatus::ok;
      outcome.repaired = true;
    }
  }
  return outcome;
}

std::vector<AnnotatedTriplet> AnnotationRun::triplets() const {
  std::vector<AnnotatedTriplet> out;
  for (const auto& outcome : outcomes) {
    if (outcome.triplet) out.push_back(*outcome.triplet);
  }
  return out;
}

AnnotationRun annotate_corpus(std::span<const DocumentSummaryPair> pairs, const PromptBook& prompts,
                              CompletionBackend& backend, const AnnotateOptions& options,
                              std::size_t parallelism) {
  if (parallelism == 0) throw InvalidArgument("annotate_corpus: parallelism must be >= 1");
  AnnotationRun run;
  run.outcomes.resize(pairs.size());
  parallel_for(pairs.size(), parallelism, [&](std::size_t i) {
    run.outcomes[i] =
        annotate_pair(pairs[i], prompts.for_domain(pairs[i].domain), backend, options, i);
  });
  for (const auto& outcome : run.outcomes) {
    switch (outcome.status) {
      case AnnotationStatus::ok:
        ++run.counts.ok;
        break;
      case AnnotationStatus::parse_mismatch:
        ++run.counts.parse_mismatch;
        break;
      case AnnotationStatus::backend_error:
        ++run.counts.backend_error;
        break;
    }
  }
  return run;
}

std::string audit_json_line(const AnnotationOutcome& outcome) {
  nlohmann::ordered_json record;
  record["id"] = outcome.id;
  record["status"] = to_string(outcome.status);
  record["attempts"] = outcome.attempts;
  record["repaired"] = outcome.repaired;
  record["error"] = outcome.error;
  record["raw_completion"] = outcome.raw_completion;
  return record.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace qfsforge
