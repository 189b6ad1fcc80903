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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "qfsforge/annotate.hpp"
#include "qfsforge/compose.hpp"
#include "qfsforge/mock_backend.hpp"
#include "qfsforge/rouge.hpp"

namespace {

std::string random_text(std::mt19937& rng, std::size_t words, std::size_t vocab) {
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) out.push_back(' ');
    out += "w" + std::to_string(rng() % vocab);
  }
  return out;
}

std::string random_sentences(std::mt19937& rng, std::size_t sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences; ++i) {
    if (i) out.push_back(' ');
    out += "Word" + random_text(rng, 12, 300) + ".";
  }
  return out;
}

void BM_RougeAll(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto words = static_cast<std::size_t>(state.range(0));
  const std::string cand = random_text(rng, words, 500);
  const std::string ref = random_text(rng, words, 500);
  for (auto _ : state) benchmark::DoNotOptimize(qfsforge::rouge_all(cand, ref));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RougeAll)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_RankDocuments(benchmark::State& state) {
  std::mt19937 rng(2);
  std::vector<std::string> docs;
  for (int i = 0; i < state.range(0); ++i) docs.push_back(random_text(rng, 400, 2000));
  const std::string query = random_text(rng, 8, 2000);
  for (auto _ : state) benchmark::DoNotOptimize(qfsforge::rank_documents(docs, query));
}
BENCHMARK(BM_RankDocuments)->Arg(5)->Arg(25)->Arg(100);

void BM_AnnotateMock(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<qfsforge::DocumentSummaryPair> pairs;
  for (int i = 0; i < 200; ++i) {
    pairs.push_back({"p" + std::to_string(i), random_sentences(rng, 20), random_sentences(rng, 3),
                     qfsforge::Domain::news});
  }
  qfsforge::MockBackend mock;
  const auto book = qfsforge::PromptBook::defaults(qfsforge::QueryMode::wh);
  const auto workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfsforge::annotate_corpus(pairs, book, mock, {}, workers));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_AnnotateMock)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
