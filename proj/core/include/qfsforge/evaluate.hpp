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
#include <span>
#include <string>
#include <vector>

#include "qfsforge/rouge.hpp"

namespace qfsforge {

struct TextRecord {
  std::string id;
  std::vector<std::string> texts;  // one for predictions, one or more for references
};

/// Reads {"id", "text"} line records. "text" may be a string or, for
/// multi-reference files, a list of strings. Composition output
/// ({"cluster_id", "summary"}) is accepted as well.
std::vector<TextRecord> load_text_records(const std::filesystem::path& path);

struct ExampleScore {
  std::string id;
  RougeTriple scores;
};

struct EvaluationReport {
  std::vector<ExampleScore> examples;  // prediction file order
  RougeTriple mean;                    // P, R and F1 each averaged over examples
  bool recall_headline = false;
};

struct EvaluateOptions {
  // Report recall instead of F1 as the headline number and pick the best
  // reference by recall.
  bool recall_headline = false;
  std::size_t parallelism = 1;
};

/// Scores aligned prediction/reference lists. Throws InvalidArgument listing
/// the offending ids when the two sides differ in size or ids, or an id
/// repeats.
EvaluationReport evaluate(std::span<const TextRecord> predictions,
                          std::span<const TextRecord> references,
                          const EvaluateOptions& options = {});

EvaluationReport evaluate_run(const std::filesystem::path& predictions,
                              const std::filesystem::path& references,
                              const EvaluateOptions& options = {});

/// Aligned text table: one row per metric with P, R and F1 means.
std::string format_report_table(const EvaluationReport& report);

/// Single JSON object with the means and the per-example scores.
std::string report_json(const EvaluationReport& report);

}  // namespace qfsforge
