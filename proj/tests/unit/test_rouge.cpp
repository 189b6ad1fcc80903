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

#include "oracles.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/rouge.hpp"

using namespace qfsforge;

TEST_CASE("rouge_n hand-scored cases") {
  const auto id = rouge_n("the cat sat", "the cat sat", 1);
  CHECK(id.precision == 1.0);
  CHECK(id.recall == 1.0);
  CHECK(id.f1 == 1.0);
  CHECK(rouge_n("a b c", "x y z", 2).f1 == 0.0);

  // Clipped unigrams: the(2) cat on mat match; "sat" and "is" do not. m = 5.
  const auto s = rouge_n("the cat sat on the mat", "the cat is on the mat", 1);
  CHECK(s.precision == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(s.recall == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(std::abs(s.f1 - 0.8333) < 1e-4);

  // Bigrams: "the cat", "on the", "the mat" match out of 5 each.
  const auto b = rouge_n("the cat sat on the mat", "the cat is on the mat", 2);
  CHECK(b.f1 == doctest::Approx(3.0 / 5.0).epsilon(1e-12));
}

TEST_CASE("clipping counts each reference n-gram at most as often as it occurs") {
  const auto s = rouge_n("the the the the", "the cat", 1);
  CHECK(s.precision == 0.25);
  CHECK(s.recall == 0.5);
}

TEST_CASE("empty sides give an all-zero flagged score") {
  const auto e = rouge_n("", "a b", 1);
  CHECK(e.empty);
  CHECK(e.f1 == 0.0);
  CHECK(rouge_n("a", "a b", 2).empty);
  CHECK(rouge_l("a", "...").empty);
  CHECK_FALSE(rouge_n("a", "a", 1).empty);
  CHECK_THROWS_AS(rouge_n("a", "a", 3), InvalidArgument);
  CHECK_THROWS_AS(rouge_n("a", "a", 0), InvalidArgument);
}

TEST_CASE("rouge_l hand-scored cases") {
  const auto s = rouge_l("a b c d", "a c b d");
  CHECK(s.precision == 0.75);
  CHECK(s.recall == 0.75);
  CHECK(s.f1 == 0.75);
  CHECK(rouge_l("a b c d", "d c b a").f1 == 0.25);
  CHECK(rouge_l("x y z", "x y z").f1 == 1.0);
}

TEST_CASE("bit-parallel LCS equals the quadratic table") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_tokens(rng, 12, 5);
    const auto b = oracle::random_tokens(rng, 12, 5);
    CHECK(lcs_length(a, b) == oracle::lcs(a, b));
  }
}

TEST_CASE("bit-parallel LCS across several 64-bit words") {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    const auto a = oracle::random_tokens(rng, 300, 4, 1);
    const auto b = oracle::random_tokens(rng, 300, 4, 1);
    CHECK(lcs_length(a, b) == oracle::lcs(a, b));
  }
}

TEST_CASE("rouge equals brute force on random token strings") {
  std::mt19937 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_tokens(rng, 8, 5);
    const auto b = oracle::random_tokens(rng, 8, 5);
    const std::string sa = oracle::join(a), sb = oracle::join(b);
    for (std::size_t n : {1u, 2u}) {
      const auto got = rouge_n(sa, sb, n);
      const auto want = oracle::rouge_n(a, b, n);
      CHECK(std::abs(got.precision - want.p) < 1e-12);
      CHECK(std::abs(got.recall - want.r) < 1e-12);
      CHECK(std::abs(got.f1 - want.f) < 1e-12);
    }
    const auto l = rouge_l(sa, sb);
    const auto wl = oracle::rouge_l(a, b);
    CHECK(std::abs(l.f1 - wl.f) < 1e-12);
  }
}

TEST_CASE("swapping candidate and reference swaps P and R and keeps F1") {
  std::mt19937 rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::string a = oracle::join(oracle::random_tokens(rng, 10, 5, 1));
    const std::string b = oracle::join(oracle::random_tokens(rng, 10, 5, 1));
    const auto ab = rouge_all(a, b), ba = rouge_all(b, a);
    for (auto m : {&RougeTriple::rouge1, &RougeTriple::rouge2, &RougeTriple::rougeL}) {
      CHECK((ab.*m).precision == doctest::Approx((ba.*m).recall));
      CHECK((ab.*m).f1 == doctest::Approx((ba.*m).f1));
    }
  }
}

TEST_CASE("appending a candidate token to the reference never lowers the ROUGE-1 match count") {
  std::mt19937 rng(10);
  for (int i = 0; i < 300; ++i) {
    const auto cand = oracle::random_tokens(rng, 8, 5, 1);
    auto ref = oracle::random_tokens(rng, 8, 5, 1);
    const auto before = rouge_n(oracle::join(cand), oracle::join(ref), 1);
    const double m_before = before.recall * double(ref.size());
    ref.push_back(cand[rng() % cand.size()]);
    const auto after = rouge_n(oracle::join(cand), oracle::join(ref), 1);
    CHECK(after.recall * double(ref.size()) >= m_before - 1e-9);
  }
}

TEST_CASE("multi-reference scoring keeps the best reference per metric") {
  const std::vector<std::string> refs{"x y z", "the cat sat", "cat the"};
  const auto best = rouge_all_multi("the cat sat", refs);
  CHECK(best.rouge1.f1 == 1.0);
  CHECK(best.rougeL.f1 == 1.0);
  CHECK_THROWS_AS(rouge_all_multi("a", std::vector<std::string>{}), InvalidArgument);

  // By recall, a short reference fully covered by the candidate wins.
  const std::vector<std::string> two{"a", "a b c d e f"};
  CHECK(rouge_all_multi("a b", two, true).rouge1.recall == 1.0);
}
