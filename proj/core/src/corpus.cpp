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

#include "qfsforge/corpus.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "jsonl.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

using nlohmann::json;

std::string_view to_string(Domain domain) {
  return domain == Domain::news ? "news" : "dialogue";
}

std::string_view to_string(QueryMode mode) { return mode == QueryMode::wh ? "wh" : "yesno"; }

Domain parse_domain(std::string_view text) {
  if (text == "news") return Domain::news;
  if (text == "dialogue") return Domain::dialogue;
  throw InvalidArgument("unknown domain '" + std::string(text) + "' (expected news or dialogue)");
}

QueryMode parse_query_mode(std::string_view text) {
  if (text == "wh") return QueryMode::wh;
  if (text == "yesno") return QueryMode::yesno;
  throw InvalidArgument("unknown query mode '" + std::string(text) + "' (expected wh or yesno)");
}

namespace {

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_space_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return false;
  const auto cp = detail::decode_utf8(text, pos);
  return cp.valid && detail::is_unicode_space(cp.value);
}

// "12. rest" -> "rest"; anything else is returned unchanged.
std::string_view strip_list_index(std::string_view line) {
  std::size_t pos = 0;
  while (pos < line.size() && is_ascii_digit(line[pos])) ++pos;
  if (pos == 0 || pos >= line.size() || line[pos] != '.') return line;
  if (!is_space_at(line, pos + 1)) return line;
  return trim(line.substr(pos + 1));
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing quotes and brackets that may trail a terminal mark.
std::size_t closer_length(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+2019 and U+201D.
  if (text.substr(pos, 3) == "\xE2\x80\x99" || text.substr(pos, 3) == "\xE2\x80\x9D") return 3;
  return 0;
}

void split_line(std::string_view line, SentenceList& out) {
  std::size_t start = 0;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (!is_terminal(line[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos + 1;
    while (end < line.size() && is_terminal(line[end])) ++end;
    while (end < line.size()) {
      const std::size_t n = closer_length(line, end);
      if (n == 0) break;
      end += n;
    }
    if (is_space_at(line, end)) {
      const auto sentence = trim(line.substr(start, end - start));
      if (!sentence.empty()) out.emplace_back(sentence);
      start = end;
    }
    pos = end;
  }
  const auto tail = trim(line.substr(start));
  if (!tail.empty()) out.emplace_back(tail);
}

nlohmann::ordered_json triplet_to_json(const AnnotatedTriplet& triplet) {
  nlohmann::ordered_json record;
  record["id"] = triplet.id;
  record["document"] = triplet.document;
  record["summary"] = triplet.summary;
  record["queries"] = triplet.queries;
  record["mode"] = to_string(triplet.mode);
  auto types = nlohmann::ordered_json::array();
  for (QueryType type : triplet.query_types) types.push_back(to_string(type));
  record["query_types"] = std::move(types);
  return record;
}

}  // namespace

SentenceList segment_sentences(std::string_view text) {
  SentenceList sentences;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    const auto line = strip_list_index(trim(text.substr(begin, end - begin)));
    if (!line.empty()) split_line(line, sentences);
    begin = end + 1;
  }
  return sentences;
}

std::string join_sentences(const SentenceList& sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i) out.push_back('\n');
    out += sentences[i];
  }
  return out;
}

void validate(const DocumentSummaryPair& pair) {
  if (pair.id.empty()) throw InvalidArgument("record has an empty id");
  if (is_blank(pair.document)) throw InvalidArgument("record '" + pair.id + "' has a blank document");
  if (is_blank(pair.summary)) throw InvalidArgument("record '" + pair.id + "' has a blank summary");
}

void validate(const AnnotatedTriplet& triplet) {
  const auto where = [&] { return "triplet '" + triplet.id + "': "; };
  if (triplet.id.empty()) throw InvalidArgument("triplet has an empty id");
  if (is_blank(triplet.document)) throw InvalidArgument(where() + "blank document");
  const std::size_t sentences = segment_sentences(triplet.summary).size();
  if (sentences == 0) throw InvalidArgument(where() + "blank summary");
  if (triplet.queries.size() != sentences) {
    throw InvalidArgument(where() + std::to_string(triplet.queries.size()) +
                          " queries for " + std::to_string(sentences) + " summary sentences");
  }
  for (const auto& query : triplet.queries) {
    const auto trimmed = trim(query);
    if (trimmed.empty() || trimmed.back() != '?') {
      throw InvalidArgument(where() + "query does not end with '?': \"" + query + "\"");
    }
  }
  if (triplet.query_types.size() != triplet.queries.size()) {
    throw InvalidArgument(where() + "query_types and queries differ in length");
  }
}

std::vector<DocumentSummaryPair> load_corpus(const std::filesystem::path& path) {
  std::vector<DocumentSummaryPair> pairs;
  std::unordered_set<std::string> seen;
  jsonl::for_each_record(path, [&](const json& record, std::size_t line) {
    const auto fail = [&](const std::string& what) { throw FormatError(path.string(), line, what); };
    DocumentSummaryPair pair;
    pair.id = jsonl::required_string(record, "id", path, line);
    pair.document = jsonl::required_string(record, "document", path, line);
    pair.summary = jsonl::required_string(record, "summary", path, line);
    try {
      pair.domain = parse_domain(jsonl::required_string(record, "domain", path, line));
      validate(pair);
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    if (!seen.insert(pair.id).second) throw DuplicateIdError(pair.id);
    pairs.push_back(std::move(pair));
  });
  return pairs;
}

std::vector<AnnotatedTriplet> load_triplets(const std::filesystem::path& path) {
  std::vector<AnnotatedTriplet> triplets;
  std::unordered_set<std::string> seen;
  jsonl::for_each_record(path, [&](const json& record, std::size_t line) {
    AnnotatedTriplet triplet;
    triplet.id = jsonl::required_string(record, "id", path, line);
    triplet.document = jsonl::required_string(record, "document", path, line);
    triplet.summary = jsonl::required_string(record, "summary", path, line);
    triplet.queries = jsonl::required_string_array(record, "queries", path, line);
    try {
      triplet.mode = parse_query_mode(jsonl::required_string(record, "mode", path, line));
      for (const auto& name : jsonl::required_string_array(record, "query_types", path, line)) {
        const auto type = parse_query_type(name);
        if (!type) throw InvalidArgument("unknown query type '" + name + "'");
        triplet.query_types.push_back(*type);
      }
      validate(triplet);
    } catch (const InvalidArgument& e) {
      throw FormatError(path.string(), line, e.what());
    }
    if (!seen.insert(triplet.id).second) throw DuplicateIdError(triplet.id);
    triplets.push_back(std::move(triplet));
  });
  return triplets;
}

std::string to_json_line(const AnnotatedTriplet& triplet) {
  try {
    return triplet_to_json(triplet).dump();
  } catch (const json::type_error& e) {
    throw InvalidArgument("triplet '" + triplet.id + "': " + e.what());
  }
}

void write_triplets(std::span<const AnnotatedTriplet> triplets, const std::filesystem::path& path) {
  std::string payload;
  for (const auto& triplet : triplets) {
    validate(triplet);
    payload += to_json_line(triplet);
    payload.push_back('\n');
  }
  jsonl::write_file(path, payload);
}

}  // namespace qfsforge
