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

#include <atomic>
#include <random>

#include "oracles.hpp"
#include "qfsforge/compose.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/mock_backend.hpp"
#include "qfsforge/text.hpp"
#include "test_util.hpp"

using namespace qfsforge;

namespace {

std::string words(const std::string& stem, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out.push_back(' ');
    out += stem + std::to_string(i);
  }
  return out;
}

/// Returns a fixed summary per document index.
class TableSummarizer final : public Summarizer {
 public:
  explicit TableSummarizer(std::vector<std::string> table) : table_(std::move(table)) {}
  std::string summarize(std::string_view, std::string_view, std::size_t index) override {
    ++calls;
    return table_.at(index);
  }
  std::atomic<int> calls{0};

 private:
  std::vector<std::string> table_;
};

class FailingSummarizer final : public Summarizer {
 public:
  explicit FailingSummarizer(std::size_t bad) : bad_(bad) {}
  std::string summarize(std::string_view, std::string_view document, std::size_t index) override {
    if (index == bad_) throw BackendError("HTTP 500");
    return std::string(document);
  }

 private:
  std::size_t bad_;
};

}  // namespace

TEST_CASE("tf-idf statistics") {
  const std::vector<std::string> docs = {"apple banana apple", "banana cherry", "durian"};
  const TfIdfIndex index(docs);
  CHECK(index.document_count() == 3);
  CHECK(index.document_frequency("banana") == 2);
  CHECK(index.document_frequency("fig") == 0);
  CHECK(index.idf("apple") == doctest::Approx(std::log(3.0) + 1.0));
  CHECK(index.idf("banana") == doctest::Approx(std::log(1.5) + 1.0));
  CHECK(index.idf("fig") == 0.0);
  const auto none = index.cosine_scores("fig grape");
  CHECK(none == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("cosine scores and ranking agree with a dense oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<oracle::Tokens> docs_tok;
    std::vector<std::string> docs;
    const std::size_t n = 1 + rng() % 8;
    for (std::size_t d = 0; d < n; ++d) {
      docs_tok.push_back(oracle::random_tokens(rng, 15, 10, 1));
      docs.push_back(oracle::join(docs_tok.back()));
    }
    const auto q = oracle::random_tokens(rng, 4, 12, 1);
    const auto expected = oracle::tfidf_cosine(docs_tok, q);
    const auto got = TfIdfIndex(docs).cosine_scores(oracle::join(q));
    REQUIRE(got.size() == expected.size());
    for (std::size_t d = 0; d < n; ++d) CHECK(got[d] == doctest::Approx(expected[d]).epsilon(1e-9));
    // Compare rankings only when the scores are well separated, so a rounding
    // difference cannot flip a near tie.
    bool separated = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const double gap = std::abs(expected[a] - expected[b]);
        separated = separated && (gap == 0.0 || gap > 1e-9);
      }
    }
    if (separated) CHECK(rank_documents(docs, oracle::join(q)) == oracle::rank_by(expected));
  }
}

TEST_CASE("ranking keeps input order on ties and rejects bad input") {
  const std::vector<std::string> docs = {"x y", "x y", "z"};
  CHECK(rank_documents(docs, "x") == std::vector<std::size_t>{0, 1, 2});
  CHECK(rank_documents(docs, "nothing") == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(rank_documents(std::vector<std::string>{}, "x"), InvalidArgument);
  CHECK_THROWS_AS(rank_documents(docs, "  "), InvalidArgument);
}

TEST_CASE("overlap percentage") {
  CHECK(overlap_pct("a b c d", "") == 0.0);
  CHECK(overlap_pct("a b c d", "b d e") == doctest::Approx(50.0));
  CHECK(overlap_pct("a a b", "a") == doctest::Approx(200.0 / 3.0));
  CHECK(overlap_pct("The cat.", "the CAT sat") == doctest::Approx(100.0));
  CHECK_THROWS_AS(overlap_pct("...", "a"), InvalidArgument);
}

TEST_CASE("three long summaries under the default budget") {
  const std::vector<RankedCandidate> cands = {{0, words("a", 120)}, {1, words("b", 120)}, {2, words("c", 120)}};
  const auto out = select_summaries(cands, {});
  CHECK(out.tokens == 250);
  CHECK(count_tokens(out.summary) == 250);
  CHECK(out.truncated);
  CHECK(out.selected_doc_indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(out.summary == words("a", 120) + " " + words("b", 120) + " " + words("c", 10));

  CompositionConfig drop;
  drop.overflow = OverflowPolicy::drop;
  const auto dropped = select_summaries(cands, drop);
  CHECK(dropped.tokens == 240);
  CHECK_FALSE(dropped.truncated);
  CHECK(dropped.selected_doc_indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("overlapping candidates are skipped and the first is always taken") {
  const std::vector<RankedCandidate> cands = {
      {4, "a b c d"}, {1, "a b x y"}, {2, "a x y z"}, {0, ""}, {3, "e f"}};
  CompositionConfig cfg;
  const auto out = select_summaries(cands, cfg);
  // "a b x y" shares 50% and is skipped; "a x y z" shares 25%.
  CHECK(out.selected_doc_indices == std::vector<std::size_t>{4, 2, 3});
  CHECK(out.summary == "a b c d a x y z e f");

  cfg.overlap_threshold = 0.0;
  const auto strict = select_summaries(cands, cfg);
  CHECK(strict.selected_doc_indices == std::vector<std::size_t>{4});
}

TEST_CASE("selection matches a hand simulation on random candidates") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<oracle::Tokens> toks;
    std::vector<RankedCandidate> cands;
    const std::size_t n = rng() % 7;
    for (std::size_t c = 0; c < n; ++c) {
      toks.push_back(oracle::random_tokens(rng, 9, 14));
      cands.push_back({c, oracle::join(toks.back())});
    }
    CompositionConfig cfg;
    cfg.token_budget = 1 + rng() % 25;
    cfg.overlap_threshold = double(rng() % 101);
    const bool truncate = rng() % 2 == 0;
    cfg.overflow = truncate ? OverflowPolicy::truncate : OverflowPolicy::drop;
    const auto expected = oracle::greedy_compose(toks, cfg.overlap_threshold, cfg.token_budget, truncate);
    const auto got = select_summaries(cands, cfg);
    CHECK(got.summary == oracle::join(expected.output));
    CHECK(got.selected_doc_indices == expected.selected);
    CHECK(got.truncated == expected.truncated);
    CHECK(got.tokens == expected.output.size());
  }
}

TEST_CASE("compose_summary ranks, summarizes and selects") {
  const std::vector<std::string> docs = {"cats and dogs", "bank rates rise", "the bank cut rates"};
  TableSummarizer table({"pets", "rates went up", "rates were cut"});
  CompositionConfig cfg;
  cfg.parallelism = 3;
  const auto out = compose_summary(docs, "bank rates", table, cfg);
  CHECK(table.calls == 3);
  CHECK(out.ranking.front() != 0);
  CHECK(out.candidate_summaries == std::vector<std::string>{"pets", "rates went up", "rates were cut"});
  CHECK(out.selected_doc_indices.front() == out.ranking.front());
}

TEST_CASE("a summarizer failure names the document") {
  const std::vector<std::string> docs = {"one", "two", "three", "four"};
  for (std::size_t workers : {1u, 4u}) {
    FailingSummarizer bad(2);
    CompositionConfig cfg;
    cfg.parallelism = workers;
    try {
      compose_summary(docs, "two", bad, cfg);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("document 2") != std::string::npos);
    }
  }
}

TEST_CASE("mock-backed composition is deterministic") {
  const auto clusters = load_clusters(testutil::data_dir() / "clusters.jsonl");
  REQUIRE(clusters.size() == 3);
  MockBackend mock(MockBackend::Script{3, MockBackend::Fallback::synthesize, {}});
  BackendSummarizer summarizer(mock);
  CompositionConfig one, many;
  many.parallelism = 4;
  for (const auto& c : clusters) {
    const auto a = compose_summary(c.documents, c.query, summarizer, one);
    const auto b = compose_summary(c.documents, c.query, summarizer, many);
    CHECK(composition_json_line(c.cluster_id, a) == composition_json_line(c.cluster_id, b));
    CHECK(a.tokens <= 250);
    CHECK(count_tokens(a.summary) == a.tokens);
  }
}

TEST_CASE("cluster files round-trip and are validated") {
  testutil::TempDir dir;
  const std::vector<Cluster> clusters = {{"c1", "Why?", {"a", "b"}}, {"c2", "How?", {"c"}}};
  write_clusters(clusters, dir.path() / "c.jsonl");
  const auto back = load_clusters(dir.path() / "c.jsonl");
  REQUIRE(back.size() == 2);
  CHECK(back[1].documents == std::vector<std::string>{"c"});

  testutil::write_file(dir.path() / "dup.jsonl",
                       "{\"cluster_id\":\"c\",\"query\":\"q\",\"documents\":[\"a\"]}\n"
                       "{\"cluster_id\":\"c\",\"query\":\"q\",\"documents\":[\"a\"]}\n");
  CHECK_THROWS_AS(load_clusters(dir.path() / "dup.jsonl"), DuplicateIdError);
  testutil::write_file(dir.path() / "empty.jsonl",
                       "{\"cluster_id\":\"c\",\"query\":\"q\",\"documents\":[]}\n");
  CHECK_THROWS_AS(load_clusters(dir.path() / "empty.jsonl"), FormatError);
}

TEST_CASE("configuration validation") {
  CompositionConfig cfg;
  cfg.token_budget = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.overlap_threshold = 101;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.parallelism = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
}
