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

// Line-record (JSONL) helpers shared by the file readers and writers.
#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qfsforge/error.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge::jsonl {

// Calls fn(record, line_number) for every non-blank line. Lines that are not
// a JSON object raise FormatError carrying the line number.
template <typename Fn>
void for_each_record(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string(), 0, "cannot open file");
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(path.string(), line_number, std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) throw FormatError(path.string(), line_number, "record is not an object");
    fn(record, line_number);
  }
  if (in.bad()) throw FormatError(path.string(), line_number, "read failure");
}

inline std::string required_string(const nlohmann::json& record, std::string_view key,
                                   const std::filesystem::path& path, std::size_t line) {
  const auto it = record.find(key);
  if (it == record.end()) {
    throw FormatError(path.string(), line, "missing field \"" + std::string(key) + "\"");
  }
  if (!it->is_string()) {
    throw FormatError(path.string(), line, "field \"" + std::string(key) + "\" is not a string");
  }
  return it->get<std::string>();
}

inline std::vector<std::string> required_string_array(const nlohmann::json& record,
                                                      std::string_view key,
                                                      const std::filesystem::path& path,
                                                      std::size_t line) {
  const auto it = record.find(key);
  if (it == record.end()) {
    throw FormatError(path.string(), line, "missing field \"" + std::string(key) + "\"");
  }
  if (!it->is_array()) {
    throw FormatError(path.string(), line, "field \"" + std::string(key) + "\" is not an array");
  }
  std::vector<std::string> out;
  for (const auto& item : *it) {
    if (!item.is_string()) {
      throw FormatError(path.string(), line,
                        "field \"" + std::string(key) + "\" holds a non-string element");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline void write_file(const std::filesystem::path& path, std::string_view payload) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace qfsforge::jsonl
