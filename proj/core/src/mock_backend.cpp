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

#include "qfsforge/mock_backend.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qfsforge/annotate.hpp"
#include "qfsforge/corpus.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

namespace {

using nlohmann::json;

MockBackend::Reply parse_reply(const json& item) {
  if (item.is_string()) return {item.get<std::string>(), false};
  if (item.is_object() && item.contains("error") && item["error"].is_string()) {
    return {item["error"].get<std::string>(), true};
  }
  throw ConfigError("mock script: a reply must be a string or {\"error\": string}");
}

// FNV-1a over the seed bytes followed by the text.
std::uint64_t mix(std::uint64_t seed, std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  const auto step = [&](unsigned char byte) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  };
  for (int shift = 0; shift < 64; shift += 8) step(static_cast<unsigned char>(seed >> shift));
  for (char c : text) step(static_cast<unsigned char>(c));
  return hash;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return lines;
}

// Index of a "N. text" line, 0 when the line is not numbered.
std::size_t list_index(std::string_view line, std::string_view* rest = nullptr) {
  line = trim(line);
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos < line.size() && pos < 9 && line[pos] >= '0' && line[pos] <= '9') {
    number = number * 10 + static_cast<std::size_t>(line[pos] - '0');
    ++pos;
  }
  if (pos == 0 || pos + 1 >= line.size() || line[pos] != '.' || line[pos + 1] != ' ') return 0;
  if (rest) *rest = trim(line.substr(pos + 2));
  return number;
}

std::string lead(std::string_view document, std::uint64_t seed) {
  const SentenceList sentences = segment_sentences(document);
  if (sentences.empty()) return std::string(trim(document));
  const std::size_t take = std::min<std::size_t>(sentences.size(), 1 + mix(seed, document) % 2);
  std::string out;
  for (std::size_t i = 0; i < take; ++i) {
    if (i) out.push_back(' ');
    out += sentences[i];
  }
  return truncate_to_tokens(out, 60).text;
}

// Short phrase from a summary sentence: up to eight tokens' worth of the raw
// text, trailing punctuation removed.
std::string phrase_of(std::string_view sentence) {
  std::string phrase = truncate_to_tokens(sentence, 8).text;
  while (!phrase.empty() && (phrase.back() == '.' || phrase.back() == '!' ||
                             phrase.back() == '?' || phrase.back() == ',' ||
                             phrase.back() == ';' || phrase.back() == ':')) {
    phrase.pop_back();
  }
  return phrase;
}

std::string question_for(std::string_view sentence, bool yesno, std::uint64_t seed) {
  static constexpr std::array<std::string_view, 6> kWh = {
      "What is said about ", "Who is involved in ", "How is it described that ",
      "Why does the text mention ", "When did it happen that ", "Where did it happen that ",
  };
  static constexpr std::array<std::string_view, 4> kYesNo = {
      "Is it true that ", "Does the text say that ", "Was it reported that ", "Did it happen that ",
  };
  const std::uint64_t h = mix(seed, sentence);
  const std::string phrase = phrase_of(sentence);
  if (!yesno) return std::string(kWh[h % kWh.size()]) + phrase + "?";
  const std::string_view label = (h >> 8) % 2 ? "No: " : "Yes: ";
  return std::string(label) + std::string(kYesNo[h % kYesNo.size()]) + phrase + "?";
}

std::string synthesize_questions(std::string_view prompt, std::uint64_t seed) {
  const auto lines = split_lines(prompt);
  std::size_t i = lines.size();
  // Trailing blank lines, then the cue line.
  while (i > 0 && is_blank(lines[i - 1])) --i;
  if (i == 0) return {};
  const std::string_view cue = lines[i - 1];
  --i;
  while (i > 0 && is_blank(lines[i - 1])) --i;

  std::vector<std::string_view> block;
  std::size_t expected_next = 0;
  while (i > 0) {
    std::string_view rest;
    const std::size_t number = list_index(lines[i - 1], &rest);
    if (number == 0 || (expected_next != 0 && number != expected_next)) break;
    block.push_back(rest);
    expected_next = number - 1;
    --i;
    if (number == 1) break;
  }
  if (block.empty() || expected_next != 0) {
    return normalize_query(cue.empty() ? prompt : cue);
  }

  bool yesno = false;
  for (const auto line : lines) {
    std::string_view rest;
    if (list_index(line, &rest) && (rest.starts_with("Yes: ") || rest.starts_with("No: "))) {
      yesno = true;
      break;
    }
  }

  std::string out;
  std::size_t n = 0;
  for (auto it = block.rbegin(); it != block.rend(); ++it) {
    if (n) out.push_back('\n');
    out += std::to_string(++n) + ". " + question_for(*it, yesno, seed);
  }
  return out;
}

}  // namespace

MockBackend::Script MockBackend::parse_script(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("mock script: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("mock script: top level must be an object");

  Script script;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer()) throw ConfigError("mock script: seed must be an integer");
    script.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("fallback")) {
    const auto fallback = doc["fallback"].get<std::string>();
    if (fallback == "synthesize") {
      script.fallback = Fallback::synthesize;
    } else if (fallback == "error") {
      script.fallback = Fallback::error;
    } else {
      throw ConfigError("mock script: fallback must be \"synthesize\" or \"error\"");
    }
  }
  if (doc.contains("completions")) {
    if (!doc["completions"].is_array()) throw ConfigError("mock script: completions must be a list");
    for (const auto& entry : doc["completions"]) {
      std::vector<Reply> replies;
      if (entry.is_array()) {
        for (const auto& item : entry) replies.push_back(parse_reply(item));
      } else if (!entry.is_null()) {
        replies.push_back(parse_reply(entry));
      }
      script.completions.push_back(std::move(replies));
    }
  }
  return script;
}

MockBackend::Script MockBackend::load_script(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open mock script " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_script(buffer.str());
}

std::string MockBackend::complete(std::string_view prompt, const CompletionParams& params,
                                  RequestTag tag) {
  params.validate();
  calls_.fetch_add(1);
  if (tag.index < script_.completions.size() && !script_.completions[tag.index].empty()) {
    const auto& replies = script_.completions[tag.index];
    const Reply& reply = replies[std::min(tag.attempt, replies.size() - 1)];
    if (reply.fail) throw BackendError(reply.text, 0, reply.text);
    return reply.text;
  }
  if (script_.fallback == Fallback::error) {
    throw BackendError("mock backend: no scripted completion for request " +
                       std::to_string(tag.index));
  }
  return synthesize(prompt, script_.seed);
}

std::string MockBackend::identity() const {
  return "mock/1 seed=" + std::to_string(script_.seed);
}

std::string MockBackend::synthesize(std::string_view prompt, std::uint64_t seed) {
  if (prompt.starts_with(kQfsQueryPrefix)) {
    const std::size_t split = prompt.find(kQfsContextPrefix);
    if (split != std::string_view::npos) {
      return lead(prompt.substr(split + kQfsContextPrefix.size()), seed);
    }
  }
  if (prompt.starts_with(kZeroShotInstruction)) {
    const auto lines = split_lines(prompt);
    // instruction, query, then the document (which may span lines).
    if (lines.size() >= 3) {
      const std::size_t offset = lines[0].size() + 1 + lines[1].size() + 1;
      return lead(prompt.substr(std::min(offset, prompt.size())), seed);
    }
  }
  return synthesize_questions(prompt, seed);
}

}  // namespace qfsforge
