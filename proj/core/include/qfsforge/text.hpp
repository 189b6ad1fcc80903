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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qfsforge {

/// The single tokenizer behind every count in the toolkit (lengths, NTP,
/// overlap, budgets, ROUGE, TF-IDF).
///
/// Rule: split on Unicode whitespace, strip leading and trailing punctuation
/// from each piece, lowercase, drop pieces that end up empty. Lowercasing
/// covers ASCII, Latin-1, basic Greek and basic Cyrillic; other scripts pass
/// through unchanged. Input is assumed to be UTF-8; invalid bytes are kept
/// verbatim and treated as letters.
std::vector<std::string> tokenize(std::string_view text);

std::size_t count_tokens(std::string_view text);

/// Removes leading and trailing Unicode whitespace.
std::string_view trim(std::string_view text);

bool is_blank(std::string_view text);

struct TruncatedText {
  std::string text;
  std::size_t tokens = 0;
  bool truncated = false;
};

/// Returns the shortest prefix of `text` that still holds the first
/// `max_tokens` tokens. The cut lands on a whitespace boundary and the kept
/// prefix is byte-identical to the source (line breaks and "\r\n" survive).
/// Text that already fits comes back trimmed and unmarked.
TruncatedText truncate_to_tokens(std::string_view text, std::size_t max_tokens);

namespace detail {

struct CodePoint {
  char32_t value;
  std::size_t length;  // bytes consumed, >= 1
  bool valid;
};

CodePoint decode_utf8(std::string_view text, std::size_t pos);
bool is_unicode_space(char32_t cp);
bool is_punctuation(char32_t cp);

}  // namespace detail

}  // namespace qfsforge
