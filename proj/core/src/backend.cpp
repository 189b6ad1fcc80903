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

#include "qfsforge/backend.hpp"

#include "qfsforge/error.hpp"

namespace qfsforge {

void CompletionParams::validate() const {
  if (!(temperature >= 0.0)) throw InvalidArgument("temperature must be >= 0");
  if (!(top_p > 0.0 && top_p <= 1.0)) throw InvalidArgument("top_p must be in (0, 1]");
  if (max_tokens == 0) throw InvalidArgument("max_tokens must be positive");
}

}  // namespace qfsforge
