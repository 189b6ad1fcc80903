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
#include <span>
#include <string>
#include <string_view>

#include "qfsforge/corpus.hpp"

namespace qfsforge {

inline constexpr std::string_view kWhInstruction =
    "For each summary, write a general question about the article that can be answered by it";
inline constexpr std::string_view kYesNoInstruction =
    "For each summary, write a binary question about the article that can be answered by it";

std::string_view instruction_for(QueryMode mode);

/// A worked document/summary/queries example placed ahead of the target.
/// Yes/no example queries keep their "Yes: " / "No: " answer prefixes.
struct OneShotExample {
  std::string document;
  SentenceList summary_sentences;
  SentenceList query_sentences;
  Domain domain = Domain::news;
  QueryMode mode = QueryMode::wh;
};

/// Section headings inside the prompt. Each label carries its own trailing
/// newline.
struct PromptLabels {
  std::string news_document = "Article:\n";
  std::string dialogue_document = "Dialogue:\n";
  std::string summary = "Summary:\n";
  std::string questions = "Questions:\n";

  const std::string& document_label(Domain domain) const {
    return domain == Domain::news ? news_document : dialogue_document;
  }
};

struct PromptSpec {
  std::string instruction;
  OneShotExample example;
  PromptLabels labels;
  // Target documents longer than this are cut at the tail before prompting.
  std::size_t max_document_tokens = 3000;

  QueryMode mode() const { return example.mode; }
  Domain domain() const { return example.domain; }
};

/// The built-in examples: a CNN news article about a FARC commander and a
/// SAMSum-style chat about advent calendars, each with wh and yes/no queries.
const OneShotExample& default_example(Domain domain, QueryMode mode);

PromptSpec default_prompt_spec(Domain domain, QueryMode mode);

/// Throws InvalidArgument for a blank instruction, an empty example or an
/// example whose summary and query lists differ in length.
void validate(const PromptSpec& spec);

/// "1. s1\n2. s2\n..." with no trailing newline. Throws on an empty list.
std::string number_sentences(std::span<const std::string> sentences);

struct AnnotationPrompt {
  std::string text;
  // Numbered lines in the target summary block; the completion must answer
  // each with exactly one query.
  std::size_t expected_queries = 0;
  bool document_truncated = false;
};

/// Renders the one-shot annotation prompt:
///
///   <instruction>
///
///   <doc label><example document>
///
///   <summary label><numbered example summary>
///
///   <questions label><numbered example queries>
///
///   <doc label><target document>
///
///   <summary label><numbered target summary>
///
///   <questions label>
///
/// Throws InvalidArgument when the pair's domain differs from the example's
/// or its summary has no sentences.
AnnotationPrompt build_annotation_prompt(const DocumentSummaryPair& pair, const PromptSpec& spec);

}  // namespace qfsforge
