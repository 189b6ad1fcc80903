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
#include <iosfwd>
#include <string>
#include <vector>

#include "qfsforge_cli/run_config.hpp"

namespace qfsforge::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,           // a module raised an error
  kExitUsage = 2,           // bad flags or configuration
  kExitFailureCeiling = 3,  // annotate: too many pairs failed
};

/// Extra inputs that only the unify ablation uses.
struct AblationRequest {
  std::string style;                 // "newts" or "duc"; empty disables the ablation
  std::filesystem::path report;      // where the ablation JSON goes
};

// Each command reads `config.input`, writes `config.output` and prints a short
// report to `out`. Module errors propagate as exceptions; run() maps them to
// exit codes.
int cmd_annotate(const RunConfig& config, std::ostream& out);
int cmd_classify(const RunConfig& config, std::ostream& out);
int cmd_stats(const RunConfig& config, std::ostream& out);
int cmd_unify(const RunConfig& config, const AblationRequest& ablation, std::ostream& out);
int cmd_compose(const RunConfig& config, std::ostream& out);
int cmd_evaluate(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name) and runs the chosen subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfsforge::cli
