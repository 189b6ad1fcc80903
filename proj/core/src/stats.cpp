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

#include "qfsforge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "qfsforge/error.hpp"
#include "qfsforge/numeric.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

double ntp(std::string_view a, std::string_view b, NtpMode mode) {
  const auto tokens_a = tokenize(a);
  if (tokens_a.empty()) throw InvalidArgument("ntp: first string has no tokens");
  const auto tokens_b = tokenize(b);
  const std::unordered_set<std::string_view> vocab_b(tokens_b.begin(), tokens_b.end());

  if (mode == NtpMode::type) {
    const std::unordered_set<std::string_view> vocab_a(tokens_a.begin(), tokens_a.end());
    const auto novel = std::count_if(vocab_a.begin(), vocab_a.end(),
                                     [&](std::string_view t) { return !vocab_b.contains(t); });
    return 100.0 * static_cast<double>(novel) / static_cast<double>(vocab_a.size());
  }
  const auto novel = std::count_if(tokens_a.begin(), tokens_a.end(),
                                   [&](const std::string& t) { return !vocab_b.contains(t); });
  return 100.0 * static_cast<double>(novel) / static_cast<double>(tokens_a.size());
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("pearson: series differ in length");
  if (xs.size() < 2) throw InvalidArgument("pearson: need at least two points");

  const double mean_x = pairwise_mean(xs);
  const double mean_y = pairwise_mean(ys);
  std::vector<double> cross(xs.size());
  std::vector<double> sq_x(xs.size());
  std::vector<double> sq_y(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    cross[i] = dx * dy;
    sq_x[i] = dx * dx;
    sq_y[i] = dy * dy;
  }
  const double var_x = pairwise_sum(sq_x);
  const double var_y = pairwise_sum(sq_y);
  if (var_x == 0.0 && var_y == 0.0) throw InvalidArgument("pearson: both series are constant");
  if (var_x == 0.0 || var_y == 0.0) return 0.0;
  const double r = pairwise_sum(cross) / std::sqrt(var_x * var_y);
  return std::clamp(r, -1.0, 1.0);
}

CorpusStats corpus_stats(std::span<const AnnotatedTriplet> triplets, NtpMode mode) {
  if (triplets.empty()) throw InvalidArgument("corpus_stats: empty triplet list");
  const std::size_t n = triplets.size();
  enum Column { doc, query, sum, sum_doc, query_doc, doc_sum, doc_query, query_sum, sum_query, kColumns };
  std::vector<std::vector<double>> columns(kColumns, std::vector<double>(n));

  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = triplets[i];
    std::string joined;
    for (std::size_t q = 0; q < t.queries.size(); ++q) {
      if (q) joined.push_back(' ');
      joined += t.queries[q];
    }
    columns[doc][i] = static_cast<double>(count_tokens(t.document));
    columns[query][i] = static_cast<double>(count_tokens(joined));
    columns[sum][i] = static_cast<double>(count_tokens(t.summary));
    columns[sum_doc][i] = ntp(t.summary, t.document, mode);
    columns[query_doc][i] = ntp(joined, t.document, mode);
    columns[doc_sum][i] = ntp(t.document, t.summary, mode);
    columns[doc_query][i] = ntp(t.document, joined, mode);
    columns[query_sum][i] = ntp(joined, t.summary, mode);
    columns[sum_query][i] = ntp(t.summary, joined, mode);
  }

  CorpusStats stats;
  stats.count = n;
  stats.mean_len_doc = pairwise_mean(columns[doc]);
  stats.mean_len_query = pairwise_mean(columns[query]);
  stats.mean_len_sum = pairwise_mean(columns[sum]);
  stats.ntp_sum_doc = pairwise_mean(columns[sum_doc]);
  stats.ntp_query_doc = pairwise_mean(columns[query_doc]);
  stats.ntp_doc_sum = pairwise_mean(columns[doc_sum]);
  stats.ntp_doc_query = pairwise_mean(columns[doc_query]);
  stats.ntp_query_sum = pairwise_mean(columns[query_sum]);
  stats.ntp_sum_query = pairwise_mean(columns[sum_query]);
  if (n >= 2) {
    try {
      stats.pearson_len_query_vs_sum = pearson(columns[query], columns[sum]);
    } catch (const InvalidArgument&) {
      // Both length series constant: correlation undefined.
    }
  }
  return stats;
}

std::string format_stats_table(std::span<const std::pair<std::string, CorpusStats>> rows) {
  static constexpr const char* kHeaders[] = {
      "count",          "len(doc)",       "len(query)",     "len(sum)",
      "ntp(sum,doc)",   "ntp(query,doc)", "ntp(doc,sum)",   "ntp(doc,query)",
      "ntp(query,sum)", "ntp(sum,query)", "pearson(q,s)",
  };
  std::size_t label_width = 7;
  for (const auto& row : rows) label_width = std::max(label_width, row.first.size());

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(label_width)) << "dataset" << std::right;
  for (const char* header : kHeaders) out << ' ' << std::setw(14) << header;
  out << '\n' << std::fixed;
  for (const auto& [label, s] : rows) {
    out << std::left << std::setw(static_cast<int>(label_width)) << label << std::right;
    out << ' ' << std::setw(14) << s.count << std::setprecision(1);
    for (double v : {s.mean_len_doc, s.mean_len_query, s.mean_len_sum}) {
      out << ' ' << std::setw(14) << v;
    }
    out << std::setprecision(2);
    for (double v : {s.ntp_sum_doc, s.ntp_query_doc, s.ntp_doc_sum, s.ntp_doc_query,
                     s.ntp_query_sum, s.ntp_sum_query}) {
      out << ' ' << std::setw(14) << v;
    }
    out << ' ' << std::setw(14);
    if (s.pearson_len_query_vs_sum) {
      out << std::setprecision(3) << *s.pearson_len_query_vs_sum;
    } else {
      out << "n/a";
    }
    out << '\n';
  }
  return out.str();
}

std::string stats_json_line(const std::string& label, const CorpusStats& stats) {
  nlohmann::ordered_json record;
  record["label"] = label;
  record["count"] = stats.count;
  record["len_doc"] = stats.mean_len_doc;
  record["len_query"] = stats.mean_len_query;
  record["len_sum"] = stats.mean_len_sum;
  record["ntp_sum_doc"] = stats.ntp_sum_doc;
  record["ntp_query_doc"] = stats.ntp_query_doc;
  record["ntp_doc_sum"] = stats.ntp_doc_sum;
  record["ntp_doc_query"] = stats.ntp_doc_query;
  record["ntp_query_sum"] = stats.ntp_query_sum;
  record["ntp_sum_query"] = stats.ntp_sum_query;
  if (stats.pearson_len_query_vs_sum) {
    record["pearson_len_query_vs_sum"] = *stats.pearson_len_query_vs_sum;
  } else {
    record["pearson_len_query_vs_sum"] = nullptr;
  }
  return record.dump();
}

}  // namespace qfsforge
