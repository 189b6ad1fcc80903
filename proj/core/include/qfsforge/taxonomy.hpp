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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace qfsforge {

/// Query type buckets keyed on the lead word of a question. The first five are
/// the yes/no buckets; what through how are the wh buckets.
enum class QueryType {
  do_does_did,
  is_are_was_were,
  can_could,
  will_would,
  have_has_had,
  what,
  when,
  where,
  who_whom,
  which,
  whose,
  why,
  how,
  other,
};

inline constexpr std::size_t kQueryTypeCount = 14;
inline constexpr std::size_t kYesNoBucketCount = 5;

inline constexpr std::array<QueryType, kQueryTypeCount> kAllQueryTypes = {
    QueryType::do_does_did, QueryType::is_are_was_were, QueryType::can_could,
    QueryType::will_would,  QueryType::have_has_had,    QueryType::what,
    QueryType::when,        QueryType::where,           QueryType::who_whom,
    QueryType::which,       QueryType::whose,           QueryType::why,
    QueryType::how,         QueryType::other,
};

std::string_view to_string(QueryType type);
std::optional<QueryType> parse_query_type(std::string_view name);
/// Column heading used in reports ("do/does/did", "who/whom", ...).
std::string_view column_label(QueryType type);

bool is_yes_no(QueryType type);
bool is_wh(QueryType type);

/// Buckets a query by its first token. Contractions count under their head
/// word ("what's" -> what, "doesn't" -> do/does/did, "won't" -> will/would).
/// Blank input and unknown heads give `other`.
QueryType classify_query(std::string_view query);

struct QueryTypeDistribution {
  std::array<double, kQueryTypeCount> percent{};
  double yes_no_aggregate = 0.0;
  double wh_aggregate = 0.0;
  std::size_t sample_count = 0;

  double operator[](QueryType type) const { return percent[static_cast<std::size_t>(type)]; }
  double other() const { return (*this)[QueryType::other]; }

  /// Builds a distribution from already-computed bucket percentages, deriving
  /// the aggregates the same way aggregate_distribution does.
  static QueryTypeDistribution from_percentages(const std::array<double, kQueryTypeCount>& percent,
                                                std::size_t sample_count = 0);
};

/// Throws InvalidArgument on an empty list.
QueryTypeDistribution aggregate_distribution(std::span<const QueryType> types);

/// Fixed-width text table with a header row, one row per labelled distribution.
std::string format_distribution_table(
    std::span<const std::pair<std::string, QueryTypeDistribution>> rows);

/// One JSON object per line: {"label", "sample_count", <bucket>..., "yes_no", "wh"}.
std::string distribution_json_line(const std::string& label, const QueryTypeDistribution& dist);

}  // namespace qfsforge
