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

#include "qfsforge/promptgen.hpp"

#include "qfsforge/error.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

std::string_view instruction_for(QueryMode mode) {
  return mode == QueryMode::wh ? kWhInstruction : kYesNoInstruction;
}

PromptSpec default_prompt_spec(Domain domain, QueryMode mode) {
  PromptSpec spec;
  spec.instruction = std::string(instruction_for(mode));
  spec.example = default_example(domain, mode);
  return spec;
}

void validate(const PromptSpec& spec) {
  if (is_blank(spec.instruction)) throw InvalidArgument("prompt instruction is blank");
  if (is_blank(spec.example.document)) throw InvalidArgument("one-shot example document is blank");
  if (spec.example.summary_sentences.empty()) {
    throw InvalidArgument("one-shot example has no summary sentences");
  }
  if (spec.example.summary_sentences.size() != spec.example.query_sentences.size()) {
    throw InvalidArgument("one-shot example has " +
                          std::to_string(spec.example.summary_sentences.size()) +
                          " summary sentences but " +
                          std::to_string(spec.example.query_sentences.size()) + " queries");
  }
  if (spec.max_document_tokens == 0) throw InvalidArgument("max_document_tokens must be positive");
}

std::string number_sentences(std::span<const std::string> sentences) {
  if (sentences.empty()) throw InvalidArgument("number_sentences: empty sentence list");
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i) out.push_back('\n');
    out += std::to_string(i + 1);
    out += ". ";
    out += sentences[i];
  }
  return out;
}

AnnotationPrompt build_annotation_prompt(const DocumentSummaryPair& pair, const PromptSpec& spec) {
  validate(spec);
  if (pair.domain != spec.domain()) {
    throw InvalidArgument("record '" + pair.id + "' is " + std::string(to_string(pair.domain)) +
                          " but the one-shot example is " +
                          std::string(to_string(spec.domain())));
  }
  const SentenceList target_sentences = segment_sentences(pair.summary);
  if (target_sentences.empty()) {
    throw InvalidArgument("record '" + pair.id + "' has no summary sentences");
  }
  const TruncatedText document = truncate_to_tokens(pair.document, spec.max_document_tokens);

  const auto& labels = spec.labels;
  const auto& doc_label = labels.document_label(spec.domain());
  AnnotationPrompt prompt;
  std::string& out = prompt.text;
  out += spec.instruction;
  out += "\n\n";
  out += doc_label + spec.example.document + "\n\n";
  out += labels.summary + number_sentences(spec.example.summary_sentences) + "\n\n";
  out += labels.questions + number_sentences(spec.example.query_sentences) + "\n\n";
  out += doc_label + document.text + "\n\n";
  out += labels.summary + number_sentences(target_sentences) + "\n\n";
  out += labels.questions;

  prompt.expected_queries = target_sentences.size();
  prompt.document_truncated = document.truncated;
  return prompt;
}

}  // namespace qfsforge
