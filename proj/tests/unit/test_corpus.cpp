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

#include "qfsforge/corpus.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/taxonomy.hpp"
#include "test_util.hpp"

using namespace qfsforge;

TEST_CASE("segment_sentences splits lines, list indices and sentence ends") {
  CHECK(segment_sentences("1. First one.\n2. Second one!") ==
        SentenceList{"First one.", "Second one!"});
  CHECK(segment_sentences("A is here. B is \"there.\" C?") ==
        SentenceList{"A is here.", "B is \"there.\"", "C?"});
  CHECK(segment_sentences("Line one\r\nLine two\n\n") == SentenceList{"Line one", "Line two"});
  CHECK(segment_sentences("Version 3.5 shipped") == SentenceList{"Version 3.5 shipped"});
  CHECK(segment_sentences("  \n ") == SentenceList{});
}

TEST_CASE("join_sentences round-trips segmenter output") {
  const char* texts[] = {"A. B. C.", "1. x\n2. y?", "One line", "Q? R! S.\nT"};
  for (const char* text : texts) {
    const auto s = segment_sentences(text);
    CHECK(segment_sentences(join_sentences(s)) == s);
  }
}

TEST_CASE("domain and mode names") {
  CHECK(parse_domain("news") == Domain::news);
  CHECK(parse_domain("dialogue") == Domain::dialogue);
  CHECK(to_string(QueryMode::yesno) == "yesno");
  CHECK_THROWS_AS(parse_domain("forum"), InvalidArgument);
  CHECK_THROWS_AS(parse_query_mode("both"), InvalidArgument);
}

TEST_CASE("load_corpus reads records in file order") {
  testutil::TempDir dir;
  testutil::write_file(dir / "c.jsonl",
                       "{\"id\":\"b\",\"document\":\"D1\",\"summary\":\"S1.\",\"domain\":\"news\"}\n"
                       "\n"
                       "{\"id\":\"a\",\"document\":\"D2\",\"summary\":\"S2.\",\"domain\":\"dialogue\"}\n");
  const auto pairs = load_corpus(dir / "c.jsonl");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].id == "b");
  CHECK(pairs[1].domain == Domain::dialogue);
}

TEST_CASE("load_corpus rejects duplicates and malformed lines with a line number") {
  testutil::TempDir dir;
  testutil::write_file(dir / "dup.jsonl",
                       "{\"id\":\"a\",\"document\":\"D\",\"summary\":\"S.\",\"domain\":\"news\"}\n"
                       "{\"id\":\"a\",\"document\":\"D\",\"summary\":\"S.\",\"domain\":\"news\"}\n");
  CHECK_THROWS_AS(load_corpus(dir / "dup.jsonl"), DuplicateIdError);

  testutil::write_file(dir / "bad.jsonl",
                       "{\"id\":\"a\",\"document\":\"D\",\"summary\":\"S.\",\"domain\":\"news\"}\n"
                       "{\"id\":\"b\",\"document\":\"D\"\n");
  try {
    load_corpus(dir / "bad.jsonl");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }

  testutil::write_file(dir / "missing.jsonl", "{\"id\":\"a\",\"document\":\"D\",\"domain\":\"news\"}\n");
  CHECK_THROWS_AS(load_corpus(dir / "missing.jsonl"), FormatError);
  testutil::write_file(dir / "domain.jsonl",
                       "{\"id\":\"a\",\"document\":\"D\",\"summary\":\"S.\",\"domain\":\"web\"}\n");
  CHECK_THROWS_AS(load_corpus(dir / "domain.jsonl"), FormatError);
  CHECK_THROWS_AS(load_corpus(dir / "absent.jsonl"), Error);
}

TEST_CASE("fixture corpus loads") {
  const auto pairs = load_corpus(testutil::data_dir() / "corpus20.jsonl");
  CHECK(pairs.size() == 20);
}

namespace {

AnnotatedTriplet make_triplet() {
  AnnotatedTriplet t;
  t.id = "t1";
  t.document = "Doc text.";
  t.summary = "First. Second.";
  t.queries = {"What first?", "Did second?"};
  t.mode = QueryMode::wh;
  for (const auto& q : t.queries) t.query_types.push_back(classify_query(q));
  return t;
}

}  // namespace

TEST_CASE("triplet validation enforces one query per summary sentence") {
  AnnotatedTriplet t = make_triplet();
  CHECK_NOTHROW(validate(t));
  t.queries.pop_back();
  t.query_types.pop_back();
  CHECK_THROWS_AS(validate(t), InvalidArgument);
  t = make_triplet();
  t.queries[0] = "Not a question";
  CHECK_THROWS_AS(validate(t), InvalidArgument);
}

TEST_CASE("triplets round-trip through a file with fixed field order") {
  testutil::TempDir dir;
  const AnnotatedTriplet t = make_triplet();
  write_triplets(std::vector{t}, dir / "t.jsonl");
  const std::string text = testutil::read_file(dir / "t.jsonl");
  CHECK(text.rfind("{\"id\":\"t1\",\"document\":", 0) == 0);
  CHECK(text.find("\"query_types\":[\"what\",\"do_does_did\"]") != std::string::npos);
  const auto back = load_triplets(dir / "t.jsonl");
  REQUIRE(back.size() == 1);
  CHECK(back[0] == t);

  AnnotatedTriplet bad = t;
  bad.queries.push_back("Extra?");
  CHECK_THROWS_AS(write_triplets(std::vector{bad}, dir / "u.jsonl"), InvalidArgument);
  CHECK_FALSE(std::filesystem::exists(dir / "u.jsonl"));
}
