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

struct CompletionParams {
  std::size_t max_tokens = 256;
  double temperature = 0.0;
  double top_p = 1.0;
  std::vector<std::string> stop_sequences = {"\n\n"};

  /// Greedy decoding, stop at the first blank line. Used for query
  /// generation, where parse reliability matters more than diversity.
  static CompletionParams annotation_defaults() { return {}; }

  /// temperature 1.0, top_p 0.9, up to 512 tokens, no stop sequence.
  static CompletionParams summarization_defaults() { return {512, 1.0, 0.9, {}}; }

  /// Throws InvalidArgument unless temperature >= 0, 0 < top_p <= 1 and
  /// max_tokens > 0.
  void validate() const;
};

/// Where a request sits in a batch. Pipelines pass the item's input index and
/// the retry attempt so scripted backends can answer independently of worker
/// scheduling. Live backends ignore it.
struct RequestTag {
  std::size_t index = 0;
  std::size_t attempt = 0;
};

/// A text-completion service. Implementations must be safe to call from
/// several threads at once.
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;

  /// Returns the completion text or throws BackendError.
  virtual std::string complete(std::string_view prompt, const CompletionParams& params,
                               RequestTag tag = {}) = 0;

  /// Name and version, recorded alongside outputs.
  virtual std::string identity() const = 0;
};

}  // namespace qfsforge
