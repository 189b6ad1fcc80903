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
#include <stdexcept>
#include <string>

namespace qfsforge {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A record file could not be read or parsed. `line` is 1-based, 0 when the
// failure is not tied to a particular line (e.g. the file cannot be opened).
class FormatError : public Error {
 public:
  FormatError(std::string path, std::size_t line, const std::string& what)
      : Error(path + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(std::string id)
      : Error("duplicate id: " + id), id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A completion did not contain the expected numbered query list.
class ParseMismatch : public Error {
 public:
  using Error::Error;
};

// The completion backend failed to produce text. `status` is the HTTP status
// when one was received, 0 for transport or scripted failures.
class BackendError : public Error {
 public:
  BackendError(const std::string& what, int status = 0, std::string body = {})
      : Error(what), status_(status), body_(std::move(body)) {}

  int status() const noexcept { return status_; }
  const std::string& body() const noexcept { return body_; }

 private:
  int status_;
  std::string body_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qfsforge
