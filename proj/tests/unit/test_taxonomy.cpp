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

#include <doctest.h>

#include <random>

#include "qfsforge/error.hpp"
#include "qfsforge/taxonomy.hpp"

using namespace qfsforge;

TEST_CASE("classify_query uses the lead token") {
  CHECK(classify_query("What is her book about?") == QueryType::what);
  CHECK(classify_query("Is he still alive?") == QueryType::is_are_was_were);
  CHECK(classify_query("Summarize the findings.") == QueryType::other);
  CHECK(classify_query("  \"Whom did she call?\"") == QueryType::who_whom);
  CHECK(classify_query("HAD they left?") == QueryType::have_has_had);
  CHECK(classify_query("Whose idea was it?") == QueryType::whose);
  CHECK(classify_query("") == QueryType::other);
  CHECK(classify_query("?!") == QueryType::other);
}

TEST_CASE("contractions classify by their head word") {
  CHECK(classify_query("What's the plan?") == QueryType::what);
  CHECK(classify_query("Who\xE2\x80\x99s coming?") == QueryType::who_whom);
  CHECK(classify_query("Didn't she go?") == QueryType::do_does_did);
  CHECK(classify_query("Won't they win?") == QueryType::will_would);
  CHECK(classify_query("Can't we stay?") == QueryType::can_could);
  CHECK(classify_query("Isn\xE2\x80\x99t it late?") == QueryType::is_are_was_were);
  CHECK(classify_query("How'd it go?") == QueryType::how);
}

TEST_CASE("appending words after the lead token never changes the bucket") {
  const char* heads[] = {"what", "Does", "were", "Could", "whose", "describe", "how's"};
  const char* tails[] = {" is it?", " the x", "", " a b c d e f?", " -- whatever"};
  for (const char* h : heads) {
    const QueryType base = classify_query(h);
    for (const char* t : tails) CHECK(classify_query(std::string(h) + t) == base);
  }
}

TEST_CASE("bucket names and labels round-trip") {
  CHECK(kAllQueryTypes.size() == 14);
  for (QueryType t : kAllQueryTypes) {
    CHECK(parse_query_type(to_string(t)) == t);
    CHECK_FALSE(column_label(t).empty());
  }
  CHECK_FALSE(parse_query_type("shall").has_value());
  CHECK(is_yes_no(QueryType::have_has_had));
  CHECK_FALSE(is_yes_no(QueryType::what));
  CHECK(is_wh(QueryType::how));
  CHECK_FALSE(is_wh(QueryType::other));
}

TEST_CASE("aggregate_distribution small cases") {
  const std::vector<QueryType> all_what(100, QueryType::what);
  const auto d = aggregate_distribution(all_what);
  CHECK(d[QueryType::what] == 100.0);
  CHECK(d.wh_aggregate == 100.0);
  CHECK(d.sample_count == 100);

  const std::vector<QueryType> split{QueryType::what, QueryType::do_does_did};
  const auto s = aggregate_distribution(split);
  CHECK(s[QueryType::what] == 50.0);
  CHECK(s.yes_no_aggregate == 50.0);
  CHECK(s.wh_aggregate == 50.0);

  CHECK_THROWS_AS(aggregate_distribution(std::vector<QueryType>{}), InvalidArgument);
}

TEST_CASE("aggregation matches a direct recount on random lists") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<QueryType> types(1 + rng() % 300);
    for (auto& t : types) t = kAllQueryTypes[rng() % kAllQueryTypes.size()];
    const auto d = aggregate_distribution(types);
    double sum = 0.0;
    for (QueryType bucket : kAllQueryTypes) {
      std::size_t n = 0;
      for (QueryType t : types) n += t == bucket ? 1 : 0;
      CHECK(d[bucket] == doctest::Approx(100.0 * n / types.size()).epsilon(1e-12));
      sum += d[bucket];
    }
    CHECK(std::abs(sum - 100.0) < 1e-6);
    double yn = 0.0, wh = 0.0;
    for (QueryType bucket : kAllQueryTypes) {
      if (is_yes_no(bucket)) yn += d[bucket];
      if (is_wh(bucket)) wh += d[bucket];
    }
    CHECK(std::abs(d.yes_no_aggregate - yn) < 1e-9);
    CHECK(std::abs(d.wh_aggregate - wh) < 1e-9);
    CHECK(std::abs(d.yes_no_aggregate + d.wh_aggregate + d.other() - 100.0) < 1e-6);
  }
}

TEST_CASE("report formats carry every bucket") {
  const std::vector<QueryType> types{QueryType::why, QueryType::other};
  const std::pair<std::string, QueryTypeDistribution> rows[] = {{"demo", aggregate_distribution(types)}};
  const std::string table = format_distribution_table(rows);
  for (QueryType t : kAllQueryTypes) CHECK(table.find(column_label(t)) != std::string::npos);
  CHECK(table.find("yes/no") != std::string::npos);
  const std::string line = distribution_json_line("demo", rows[0].second);
  CHECK(line.find("\"why\":50.0") != std::string::npos);
  CHECK(line.find("\"sample_count\":2") != std::string::npos);
}
