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

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/stats.hpp"
#include "qfsforge/taxonomy.hpp"
#include "test_util.hpp"

using namespace qfsforge;

TEST_CASE("ntp hand-counted cases") {
  CHECK(ntp("the red fox", "the fox ran") == doctest::Approx(100.0 / 3.0).epsilon(1e-12));
  CHECK(ntp("a b", "") == 100.0);
  CHECK(ntp("a a b", "b") == doctest::Approx(200.0 / 3.0));
  CHECK(ntp("a a b", "b", NtpMode::type) == 50.0);
  CHECK_THROWS_AS(ntp("", "x"), InvalidArgument);
  CHECK_THROWS_AS(ntp(" ... ", "x"), InvalidArgument);
}

TEST_CASE("ntp identities on random strings") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_tokens(rng, 15, 8, 1);
    auto b = oracle::random_tokens(rng, 15, 8, 1);
    CHECK(ntp(oracle::join(a), oracle::join(a)) == 0.0);
    for (auto& t : b) t = "z" + t;  // disjoint vocabulary
    CHECK(ntp(oracle::join(a), oracle::join(b)) == 100.0);
    CHECK(ntp(oracle::join(a), oracle::join(b)) >= 0.0);
  }
}

TEST_CASE("ntp matches a linear-scan recount") {
  std::mt19937 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_tokens(rng, 12, 6, 1);
    const auto b = oracle::random_tokens(rng, 12, 6, 0);
    CHECK(std::abs(ntp(oracle::join(a), oracle::join(b)) - oracle::ntp(a, b)) < 1e-12);
  }
}

TEST_CASE("pearson identities and the closed form") {
  const std::vector<double> v{1, 4, 2, 8, 5};
  std::vector<double> neg;
  for (double x : v) neg.push_back(-x);
  CHECK(pearson(v, v) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pearson(v, neg) == doctest::Approx(-1.0).epsilon(1e-12));

  const std::vector<double> x{1, 2, 3}, y{2, 4, 7};
  // Deviations: dx = (-1, 0, 1), dy = (-7, -1, 8) / 3, so
  // r = 5 / sqrt(2 * 114 / 9) = 15 / sqrt(228).
  CHECK(std::abs(pearson(x, y) - 15.0 / std::sqrt(228.0)) < 1e-12);
  CHECK(std::abs(pearson(x, y) - oracle::pearson(x, y)) < 1e-12);

  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{1}), InvalidArgument);
  CHECK_THROWS_AS(pearson(x, std::vector<double>{1, 2}), InvalidArgument);
  CHECK_THROWS_AS(pearson(std::vector<double>{2, 2}, std::vector<double>{3, 3}), InvalidArgument);
  CHECK(pearson(std::vector<double>{2, 2, 2}, y) == 0.0);
}

TEST_CASE("pearson agrees with the raw-sum formula on random series") {
  std::mt19937 rng(5);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(2 + rng() % 30), y;
    for (auto& v : x) v = noise(rng) * 10;
    for (double v : x) y.push_back(0.5 * v + noise(rng));
    const double r = pearson(x, y);
    CHECK(r <= 1.0);
    CHECK(r >= -1.0);
    CHECK(std::abs(r - oracle::pearson(x, y)) < 1e-9);
  }
}

TEST_CASE("corpus_stats on a single degenerate triplet") {
  AnnotatedTriplet t;
  t.id = "x";
  t.document = "a b c";
  t.summary = "a b c";
  t.queries = {"a b c"};
  t.query_types = {classify_query("a b c")};
  const auto s = corpus_stats(std::vector{t});
  CHECK(s.count == 1);
  CHECK(s.mean_len_doc == 3.0);
  CHECK(s.mean_len_query == 3.0);
  CHECK(s.mean_len_sum == 3.0);
  CHECK(s.ntp_sum_doc == 0.0);
  CHECK(s.ntp_sum_query == 0.0);
  CHECK_FALSE(s.pearson_len_query_vs_sum.has_value());
  CHECK_THROWS_AS(corpus_stats(std::vector<AnnotatedTriplet>{}), InvalidArgument);
}

TEST_CASE("corpus_stats equals a field-by-field recount of the fixture") {
  const auto triplets = load_triplets(testutil::data_dir() / "stats10.jsonl");
  REQUIRE(triplets.size() == 10);
  const auto s = corpus_stats(triplets);

  std::vector<double> lq, ls;
  double ld = 0, n_sd = 0, n_qd = 0, n_ds = 0, n_dq = 0, n_qs = 0, n_sq = 0;
  for (const auto& t : triplets) {
    std::string q;
    for (const auto& x : t.queries) q += x + " ";
    const auto d = oracle::ascii_tokens(t.document), sm = oracle::ascii_tokens(t.summary),
               qq = oracle::ascii_tokens(q);
    ld += double(d.size());
    lq.push_back(double(qq.size()));
    ls.push_back(double(sm.size()));
    n_sd += oracle::ntp(sm, d);
    n_qd += oracle::ntp(qq, d);
    n_ds += oracle::ntp(d, sm);
    n_dq += oracle::ntp(d, qq);
    n_qs += oracle::ntp(qq, sm);
    n_sq += oracle::ntp(sm, qq);
  }
  double sum_q = 0, sum_s = 0;
  for (double v : lq) sum_q += v;
  for (double v : ls) sum_s += v;
  CHECK(s.count == 10);
  CHECK(std::abs(s.mean_len_doc - ld / 10) < 1e-9);
  CHECK(std::abs(s.mean_len_query - sum_q / 10) < 1e-9);
  CHECK(std::abs(s.mean_len_sum - sum_s / 10) < 1e-9);
  CHECK(std::abs(s.ntp_sum_doc - n_sd / 10) < 1e-9);
  CHECK(std::abs(s.ntp_query_doc - n_qd / 10) < 1e-9);
  CHECK(std::abs(s.ntp_doc_sum - n_ds / 10) < 1e-9);
  CHECK(std::abs(s.ntp_doc_query - n_dq / 10) < 1e-9);
  CHECK(std::abs(s.ntp_query_sum - n_qs / 10) < 1e-9);
  CHECK(std::abs(s.ntp_sum_query - n_sq / 10) < 1e-9);
  REQUIRE(s.pearson_len_query_vs_sum.has_value());
  CHECK(std::abs(*s.pearson_len_query_vs_sum - oracle::pearson(lq, ls)) < 1e-9);
}

TEST_CASE("stats report renders in table and record form") {
  const auto triplets = load_triplets(testutil::data_dir() / "stats10.jsonl");
  const std::pair<std::string, CorpusStats> rows[] = {{"fixture", corpus_stats(triplets)}};
  const auto table = format_stats_table(rows);
  CHECK(table.find("ntp(sum,doc)") < table.find("ntp(sum,query)"));
  CHECK(table.find("fixture") != std::string::npos);
  CHECK(stats_json_line("fixture", rows[0].second).find("\"count\":10") != std::string::npos);
}
