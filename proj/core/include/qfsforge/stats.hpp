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
#include <utility>

#include "qfsforge/corpus.hpp"

namespace qfsforge {

enum class NtpMode {
  occurrence,  // novel token occurrences in a / all token occurrences in a
  type,        // novel token types in a / all token types in a
};

/// Novel token percentage: share of the tokens of `a` whose type never
/// occurs in `b`. Asymmetric: ntp(a, b) and ntp(b, a) are independent.
/// Throws InvalidArgument when `a` has no tokens.
double ntp(std::string_view a, std::string_view b, NtpMode mode = NtpMode::occurrence);

/// Sample Pearson correlation coefficient.
///
/// Throws InvalidArgument for mismatched lengths, fewer than two points or
/// when both series are constant. If exactly one series is constant the
/// coefficient is undefined and 0 is returned.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct CorpusStats {
  std::size_t count = 0;
  double mean_len_doc = 0.0;
  double mean_len_query = 0.0;
  double mean_len_sum = 0.0;
  double ntp_sum_doc = 0.0;
  double ntp_query_doc = 0.0;
  double ntp_doc_sum = 0.0;
  double ntp_doc_query = 0.0;
  double ntp_query_sum = 0.0;
  double ntp_sum_query = 0.0;
  // Absent for fewer than two triplets or when both length series are
  // constant.
  std::optional<double> pearson_len_query_vs_sum;
};

/// Per-triplet lengths and NTPs averaged over the corpus. A triplet's queries
/// are joined with single spaces and measured as one string. Throws
/// InvalidArgument for an empty list.
CorpusStats corpus_stats(std::span<const AnnotatedTriplet> triplets,
                         NtpMode mode = NtpMode::occurrence);

/// Columns: dataset, count, len(doc), len(query), len(sum), then the six NTP
/// columns in (sum,doc) (query,doc) (doc,sum) (doc,query) (query,sum)
/// (sum,query) order, then pearson(query,sum).
std::string format_stats_table(std::span<const std::pair<std::string, CorpusStats>> rows);

std::string stats_json_line(const std::string& label, const CorpusStats& stats);

}  // namespace qfsforge
