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

namespace qfsforge {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Set when either side had no units to compare (no tokens, or fewer tokens
  // than the n-gram order); the score is then all zeros.
  bool empty = false;

  static RougeScore from_counts(std::size_t matches, std::size_t candidate_units,
                                std::size_t reference_units);
};

/// ROUGE-N with clipped n-gram counts, over the shared tokenizer.
/// Throws InvalidArgument unless n is 1 or 2.
RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n);

/// ROUGE-L from the longest common token subsequence.
RougeScore rouge_l(std::string_view candidate, std::string_view reference);

/// Length of the longest common subsequence of two token sequences.
/// Bit-parallel (Hyyrö 2004): O(|a| * ceil(|b| / 64)) time, O(|b|) memory.
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

struct RougeTriple {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;
};

RougeTriple rouge_all(std::string_view candidate, std::string_view reference);

/// Best score per metric (by F1, or by recall when `by_recall`) over several
/// references. Throws InvalidArgument when `references` is empty.
RougeTriple rouge_all_multi(std::string_view candidate, std::span<const std::string> references,
                            bool by_recall = false);

}  // namespace qfsforge
