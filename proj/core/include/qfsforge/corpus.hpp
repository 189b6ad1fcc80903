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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfsforge/taxonomy.hpp"

namespace qfsforge {

enum class Domain { news, dialogue };
enum class QueryMode { wh, yesno };

std::string_view to_string(Domain domain);
std::string_view to_string(QueryMode mode);
Domain parse_domain(std::string_view text);
QueryMode parse_query_mode(std::string_view text);

struct DocumentSummaryPair {
  std::string id;
  std::string document;
  std::string summary;
  Domain domain = Domain::news;

  friend bool operator==(const DocumentSummaryPair&, const DocumentSummaryPair&) = default;
};

using SentenceList = std::vector<std::string>;

/// Document, generated queries (one per summary sentence) and summary.
struct AnnotatedTriplet {
  std::string id;
  std::string document;
  std::vector<std::string> queries;
  std::string summary;
  QueryMode mode = QueryMode::wh;
  std::vector<QueryType> query_types;

  friend bool operator==(const AnnotatedTriplet&, const AnnotatedTriplet&) = default;
};

/// Splits text into sentences.
///
/// Lines are split first ("\r\n" and "\n"); a leading list index such as
/// "3. " is dropped from each line; the remainder is split after '.', '!' or
/// '?' when followed by whitespace. Terminal punctuation stays attached to
/// its sentence. Abbreviations get no special handling, so "U.S. Army" splits
/// after "U.S.".
SentenceList segment_sentences(std::string_view text);

/// Joins with "\n"; segment_sentences(join_sentences(s)) == s for any
/// segmenter output s.
std::string join_sentences(const SentenceList& sentences);

/// Throws InvalidArgument when the pair's text fields are blank or the id is
/// empty.
void validate(const DocumentSummaryPair& pair);

/// Throws InvalidArgument unless the triplet has one non-empty query ending in
/// '?' per summary sentence and one query type per query.
void validate(const AnnotatedTriplet& triplet);

std::vector<DocumentSummaryPair> load_corpus(const std::filesystem::path& path);

std::vector<AnnotatedTriplet> load_triplets(const std::filesystem::path& path);

/// Validates every triplet before touching the file, then writes one JSON
/// record per line.
void write_triplets(std::span<const AnnotatedTriplet> triplets, const std::filesystem::path& path);

std::string to_json_line(const AnnotatedTriplet& triplet);

}  // namespace qfsforge
