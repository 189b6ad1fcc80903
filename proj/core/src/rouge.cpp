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

#include "qfsforge/rouge.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qfsforge/error.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

RougeScore RougeScore::from_counts(std::size_t matches, std::size_t candidate_units,
                                   std::size_t reference_units) {
  RougeScore score;
  if (candidate_units == 0 || reference_units == 0) {
    score.empty = true;
    return score;
  }
  score.precision = static_cast<double>(matches) / static_cast<double>(candidate_units);
  score.recall = static_cast<double>(matches) / static_cast<double>(reference_units);
  const double denom = score.precision + score.recall;
  score.f1 = denom > 0.0 ? 2.0 * score.precision * score.recall / denom : 0.0;
  return score;
}

namespace {

using NgramCounts = std::unordered_map<std::string, std::size_t>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::size_t ngram_total(std::size_t tokens, std::size_t n) { return tokens >= n ? tokens - n + 1 : 0; }

}  // namespace

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n) {
  if (n != 1 && n != 2) throw InvalidArgument("rouge_n: n must be 1 or 2");
  const auto cand_tokens = tokenize(candidate);
  const auto ref_tokens = tokenize(reference);
  const auto cand = count_ngrams(cand_tokens, n);
  const auto ref = count_ngrams(ref_tokens, n);

  std::size_t matches = 0;
  for (const auto& [gram, count] : cand) {
    if (const auto it = ref.find(gram); it != ref.end()) matches += std::min(count, it->second);
  }
  return RougeScore::from_counts(matches, ngram_total(cand_tokens.size(), n),
                                 ngram_total(ref_tokens.size(), n));
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  const std::size_t words = (b.size() + 63) / 64;

  // Match masks: bit j of masks[token] is set iff b[j] == token.
  std::unordered_map<std::string_view, std::vector<std::uint64_t>> masks;
  for (std::size_t j = 0; j < b.size(); ++j) {
    auto& mask = masks[b[j]];
    if (mask.empty()) mask.assign(words, 0);
    mask[j / 64] |= std::uint64_t{1} << (j % 64);
  }

  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  for (const auto& token : a) {
    const auto it = masks.find(token);
    if (it == masks.end()) continue;
    const auto& match = it->second;
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t u = v[w] & match[w];
      const std::uint64_t sum = v[w] + u;
      const std::uint64_t with_carry = sum + carry;
      const std::uint64_t next_carry = (sum < v[w]) || (with_carry < sum) ? 1 : 0;
      v[w] = with_carry | (v[w] & ~match[w]);
      carry = next_carry;
    }
  }

  std::size_t zeros = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t live = v[w];
    const std::size_t bits = (w + 1 == words && b.size() % 64) ? b.size() % 64 : 64;
    if (bits < 64) live |= ~((std::uint64_t{1} << bits) - 1);
    zeros += static_cast<std::size_t>(std::popcount(~live));
  }
  return zeros;
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  const auto cand = tokenize(candidate);
  const auto ref = tokenize(reference);
  return RougeScore::from_counts(lcs_length(cand, ref), cand.size(), ref.size());
}

RougeTriple rouge_all(std::string_view candidate, std::string_view reference) {
  return {rouge_n(candidate, reference, 1), rouge_n(candidate, reference, 2),
          rouge_l(candidate, reference)};
}

RougeTriple rouge_all_multi(std::string_view candidate, std::span<const std::string> references,
                            bool by_recall) {
  if (references.empty()) throw InvalidArgument("rouge_all_multi: no references");
  const auto key = [by_recall](const RougeScore& s) { return by_recall ? s.recall : s.f1; };
  RougeTriple best = rouge_all(candidate, references.front());
  for (std::size_t i = 1; i < references.size(); ++i) {
    const RougeTriple next = rouge_all(candidate, references[i]);
    if (key(next.rouge1) > key(best.rouge1)) best.rouge1 = next.rouge1;
    if (key(next.rouge2) > key(best.rouge2)) best.rouge2 = next.rouge2;
    if (key(next.rougeL) > key(best.rougeL)) best.rougeL = next.rougeL;
  }
  return best;
}

}  // namespace qfsforge
