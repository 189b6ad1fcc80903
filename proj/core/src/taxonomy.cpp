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

#include "qfsforge/taxonomy.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qfsforge/error.hpp"
#include "qfsforge/numeric.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {
namespace {

struct BucketInfo {
  QueryType type;
  std::string_view name;
  std::string_view label;
};

constexpr std::array<BucketInfo, kQueryTypeCount> kBuckets = {{
    {QueryType::do_does_did, "do_does_did", "do/does/did"},
    {QueryType::is_are_was_were, "is_are_was_were", "is/are/was/were"},
    {QueryType::can_could, "can_could", "can/could"},
    {QueryType::will_would, "will_would", "will/would"},
    {QueryType::have_has_had, "have_has_had", "have/has/had"},
    {QueryType::what, "what", "what"},
    {QueryType::when, "when", "when"},
    {QueryType::where, "where", "where"},
    {QueryType::who_whom, "who_whom", "who/whom"},
    {QueryType::which, "which", "which"},
    {QueryType::whose, "whose", "whose"},
    {QueryType::why, "why", "why"},
    {QueryType::how, "how", "how"},
    {QueryType::other, "other", "other"},
}};

struct HeadWord {
  std::string_view word;
  QueryType type;
};

constexpr HeadWord kHeads[] = {
    {"do", QueryType::do_does_did},       {"does", QueryType::do_does_did},
    {"did", QueryType::do_does_did},      {"is", QueryType::is_are_was_were},
    {"are", QueryType::is_are_was_were},  {"was", QueryType::is_are_was_were},
    {"were", QueryType::is_are_was_were}, {"can", QueryType::can_could},
    {"could", QueryType::can_could},      {"will", QueryType::will_would},
    {"would", QueryType::will_would},     {"have", QueryType::have_has_had},
    {"has", QueryType::have_has_had},     {"had", QueryType::have_has_had},
    {"what", QueryType::what},            {"when", QueryType::when},
    {"where", QueryType::where},          {"who", QueryType::who_whom},
    {"whom", QueryType::who_whom},        {"which", QueryType::which},
    {"whose", QueryType::whose},          {"why", QueryType::why},
    {"how", QueryType::how},
};

// Reduces a contracted lead token to its head word.
std::string contraction_head(std::string token) {
  // Typographic apostrophe U+2019.
  static const std::string kCurly = "\xE2\x80\x99";
  std::size_t cut = token.find('\'');
  cut = std::min(cut, token.find(kCurly));
  if (cut == std::string::npos) return token;

  const std::string_view rest = std::string_view(token).substr(cut);
  const bool negated = rest == "'t" || rest == kCurly + "t";
  std::string head = token.substr(0, cut);
  if (negated && head.size() > 1 && head.back() == 'n') {
    head.pop_back();
    if (head == "wo") return "will";
    if (head == "ca") return "can";
    if (head == "sha") return "shall";
  }
  return head;
}

}  // namespace

std::string_view to_string(QueryType type) { return kBuckets[static_cast<std::size_t>(type)].name; }

std::string_view column_label(QueryType type) {
  return kBuckets[static_cast<std::size_t>(type)].label;
}

std::optional<QueryType> parse_query_type(std::string_view name) {
  for (const auto& bucket : kBuckets) {
    if (bucket.name == name) return bucket.type;
  }
  return std::nullopt;
}

bool is_yes_no(QueryType type) { return static_cast<std::size_t>(type) < kYesNoBucketCount; }

bool is_wh(QueryType type) { return !is_yes_no(type) && type != QueryType::other; }

QueryType classify_query(std::string_view query) {
  const auto tokens = tokenize(query);
  if (tokens.empty()) return QueryType::other;
  const std::string head = contraction_head(tokens.front());
  for (const auto& entry : kHeads) {
    if (entry.word == head) return entry.type;
  }
  return QueryType::other;
}

QueryTypeDistribution QueryTypeDistribution::from_percentages(
    const std::array<double, kQueryTypeCount>& percent, std::size_t sample_count) {
  QueryTypeDistribution dist;
  dist.percent = percent;
  dist.sample_count = sample_count;
  const std::span<const double> all(dist.percent);
  dist.yes_no_aggregate = pairwise_sum(all.first(kYesNoBucketCount));
  dist.wh_aggregate =
      pairwise_sum(all.subspan(kYesNoBucketCount, kQueryTypeCount - kYesNoBucketCount - 1));
  return dist;
}

QueryTypeDistribution aggregate_distribution(std::span<const QueryType> types) {
  if (types.empty()) throw InvalidArgument("aggregate_distribution: empty query type list");
  std::array<std::size_t, kQueryTypeCount> counts{};
  for (QueryType type : types) ++counts[static_cast<std::size_t>(type)];

  std::array<double, kQueryTypeCount> percent{};
  const auto total = static_cast<double>(types.size());
  for (std::size_t i = 0; i < kQueryTypeCount; ++i) {
    percent[i] = 100.0 * static_cast<double>(counts[i]) / total;
  }
  return QueryTypeDistribution::from_percentages(percent, types.size());
}

std::string format_distribution_table(
    std::span<const std::pair<std::string, QueryTypeDistribution>> rows) {
  std::size_t label_width = 7;
  for (const auto& [label, dist] : rows) label_width = std::max(label_width, label.size());

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(label_width)) << "dataset" << std::right
      << std::setw(9) << "count";
  for (QueryType type : kAllQueryTypes) {
    const auto label = column_label(type);
    out << ' ' << std::setw(std::max<int>(7, static_cast<int>(label.size()))) << label;
  }
  out << ' ' << std::setw(7) << "yes/no" << ' ' << std::setw(7) << "wh" << '\n';

  out << std::fixed << std::setprecision(2);
  for (const auto& [label, dist] : rows) {
    out << std::left << std::setw(static_cast<int>(label_width)) << label << std::right
        << std::setw(9) << dist.sample_count;
    for (QueryType type : kAllQueryTypes) {
      const int width = std::max<int>(7, static_cast<int>(column_label(type).size()));
      out << ' ' << std::setw(width) << dist[type];
    }
    out << ' ' << std::setw(7) << dist.yes_no_aggregate << ' ' << std::setw(7)
        << dist.wh_aggregate << '\n';
  }
  return out.str();
}

std::string distribution_json_line(const std::string& label, const QueryTypeDistribution& dist) {
  nlohmann::ordered_json record;
  record["label"] = label;
  record["sample_count"] = dist.sample_count;
  for (QueryType type : kAllQueryTypes) record[std::string(to_string(type))] = dist[type];
  record["yes_no"] = dist.yes_no_aggregate;
  record["wh"] = dist.wh_aggregate;
  return record.dump();
}

}  // namespace qfsforge
