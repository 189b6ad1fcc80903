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

#include "qfsforge/text.hpp"

namespace qfsforge {
namespace detail {

CodePoint decode_utf8(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1, true};

  std::size_t length = 0;
  char32_t value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {lead, 1, false};
  }
  if (pos + length > text.size()) return {lead, 1, false};
  for (std::size_t i = 1; i < length; ++i) {
    const unsigned char next = byte(pos + i);
    if ((next & 0xC0) != 0x80) return {lead, 1, false};
    value = (value << 6) | (next & 0x3F);
  }
  // Reject overlong forms and surrogates.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (value < kMin[length] || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    return {lead, 1, false};
  }
  return {value, length, true};
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB: case 0xBF:
    case 0x3001: case 0x3002: case 0x3003:
    case 0xFF01: case 0xFF0C: case 0xFF0E: case 0xFF1A: case 0xFF1B: case 0xFF1F:
      return true;
    default:
      break;
  }
  // General Punctuation block, minus the spaces handled above.
  if (cp >= 0x2010 && cp <= 0x2027) return true;
  if (cp >= 0x2030 && cp <= 0x205E) return true;
  // CJK brackets.
  if (cp >= 0x3008 && cp <= 0x3011) return true;
  return false;
}

namespace {

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

// Visits every whitespace-delimited word of `text` as a byte span.
template <typename Fn>
void for_each_word(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t word_begin = std::string_view::npos;
  while (pos < text.size()) {
    const CodePoint cp = decode_utf8(text, pos);
    const bool space = cp.valid && is_unicode_space(cp.value);
    if (space) {
      if (word_begin != std::string_view::npos) {
        if (!fn(Span{word_begin, pos})) return;
        word_begin = std::string_view::npos;
      }
    } else if (word_begin == std::string_view::npos) {
      word_begin = pos;
    }
    pos += cp.length;
  }
  if (word_begin != std::string_view::npos) fn(Span{word_begin, text.size()});
}

// Normalizes one whitespace-free word into its token (possibly empty).
std::string normalize_word(std::string_view word) {
  std::vector<CodePoint> cps;
  for (std::size_t pos = 0; pos < word.size();) {
    cps.push_back(decode_utf8(word, pos));
    pos += cps.back().length;
  }
  std::size_t first = 0;
  std::size_t last = cps.size();
  while (first < last && cps[first].valid && is_punctuation(cps[first].value)) ++first;
  while (last > first && cps[last - 1].valid && is_punctuation(cps[last - 1].value)) --last;

  std::string out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < first; ++i) offset += cps[i].length;
  for (std::size_t i = first; i < last; ++i) {
    if (cps[i].valid) {
      append_utf8(out, to_lower(cps[i].value));
    } else {
      out.push_back(word[offset]);
    }
    offset += cps[i].length;
  }
  return out;
}

}  // namespace
}  // namespace detail

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  detail::for_each_word(text, [&](detail::Span span) {
    std::string token = detail::normalize_word(text.substr(span.begin, span.end - span.begin));
    if (!token.empty()) tokens.push_back(std::move(token));
    return true;
  });
  return tokens;
}

std::size_t count_tokens(std::string_view text) {
  std::size_t count = 0;
  detail::for_each_word(text, [&](detail::Span span) {
    if (!detail::normalize_word(text.substr(span.begin, span.end - span.begin)).empty()) ++count;
    return true;
  });
  return count;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size()) {
    const auto cp = detail::decode_utf8(text, begin);
    if (!cp.valid || !detail::is_unicode_space(cp.value)) break;
    begin += cp.length;
  }
  // Walk forward to find the end of the last non-space code point; UTF-8 is
  // not cheaply decodable backwards.
  std::size_t end = begin;
  for (std::size_t pos = begin; pos < text.size();) {
    const auto cp = detail::decode_utf8(text, pos);
    pos += cp.length;
    if (!cp.valid || !detail::is_unicode_space(cp.value)) end = pos;
  }
  return text.substr(begin, end - begin);
}

bool is_blank(std::string_view text) { return trim(text).empty(); }

TruncatedText truncate_to_tokens(std::string_view text, std::size_t max_tokens) {
  TruncatedText result;
  std::size_t cut = 0;
  bool overflow = false;
  detail::for_each_word(text, [&](detail::Span span) {
    if (detail::normalize_word(text.substr(span.begin, span.end - span.begin)).empty()) {
      return true;
    }
    if (result.tokens == max_tokens) {
      overflow = true;
      return false;
    }
    ++result.tokens;
    cut = span.end;
    return true;
  });
  if (!overflow) {
    result.text = std::string(trim(text));
    return result;
  }
  result.text = std::string(trim(text.substr(0, cut)));
  result.truncated = true;
  return result;
}

}  // namespace qfsforge
