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

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "qfsforge/error.hpp"
#include "qfsforge_cli/commands.hpp"

namespace qfsforge::cli {

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> parallelism;

  std::string input;
  std::string output;
  std::string audit;
  std::string references;
  std::string label;
  std::optional<std::string> mode;
  std::optional<double> failure_ceiling;
  std::optional<std::size_t> retries;
  std::optional<std::string> policy;
  std::optional<std::string> ntp_mode;
  std::optional<std::string> format;
  std::optional<std::size_t> budget;
  std::optional<double> threshold;
  std::optional<std::string> overflow;
  bool recall = false;
  AblationRequest ablation;
  std::string ablation_report;
};

void add_io(CLI::App* cmd, Flags& f, const char* input_help) {
  cmd->add_option("-i,--input", f.input, input_help);
  cmd->add_option("-o,--output", f.output, "Output file");
}

template <class T, class Parse>
T parse_flag(const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

RunConfig build_config(const Flags& f) {
  RunConfig config = f.config.empty() ? RunConfig{} : load_run_config(f.config);
  if (f.seed) config.backend.seed = *f.seed;
  if (f.parallelism) {
    if (*f.parallelism == 0) throw ConfigError("--parallelism must be >= 1");
    config.parallelism = *f.parallelism;
  }
  if (!f.input.empty()) config.input = f.input;
  if (!f.output.empty()) config.output = f.output;
  if (!f.audit.empty()) config.audit = f.audit;
  if (!f.references.empty()) config.references = f.references;
  if (!f.label.empty()) config.label = f.label;
  if (f.mode) {
    const QueryMode mode = parse_flag<QueryMode>(*f.mode, parse_query_mode);
    if (mode != config.mode && (config.news_prompt || config.dialogue_prompt)) {
      throw ConfigError("--mode conflicts with the prompt examples in the configuration");
    }
    config.mode = mode;
  }
  if (f.failure_ceiling) {
    if (!(*f.failure_ceiling >= 0.0 && *f.failure_ceiling <= 1.0)) {
      throw ConfigError("--failure-ceiling must be within [0, 1]");
    }
    config.failure_ceiling = *f.failure_ceiling;
  }
  if (f.retries) config.retries = *f.retries;
  if (f.policy) config.failure_policy = parse_flag<FailurePolicy>(*f.policy, parse_failure_policy);
  if (f.ntp_mode) {
    if (*f.ntp_mode == "occurrence") {
      config.ntp_mode = NtpMode::occurrence;
    } else if (*f.ntp_mode == "type") {
      config.ntp_mode = NtpMode::type;
    } else {
      throw ConfigError("--ntp-mode must be 'occurrence' or 'type'");
    }
  }
  if (f.format) config.query_format = parse_flag<QueryFormat>(*f.format, parse_query_format);
  if (f.budget) config.composition.token_budget = *f.budget;
  if (f.threshold) config.composition.overlap_threshold = *f.threshold;
  if (f.overflow) {
    if (*f.overflow == "truncate") {
      config.composition.overflow = OverflowPolicy::truncate;
    } else if (*f.overflow == "drop") {
      config.composition.overflow = OverflowPolicy::drop;
    } else {
      throw ConfigError("--overflow must be 'truncate' or 'drop'");
    }
  }
  try {
    config.composition.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (f.recall) config.recall_headline = true;
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Query-focused summarization corpus toolkit", "qfs_forge"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", f.seed, "Seed for the mock backend");
  app.add_option("--parallelism", f.parallelism, "Concurrent backend requests");

  auto* annotate = app.add_subcommand("annotate", "Generate queries for document/summary pairs");
  add_io(annotate, f, "Corpus JSONL ({id, document, summary, domain})");
  annotate->add_option("--audit", f.audit, "Failure audit JSONL (default <output>.audit.jsonl)");
  annotate->add_option("--mode", f.mode, "Query mode: wh or yesno");
  annotate->add_option("--failure-ceiling", f.failure_ceiling, "Largest tolerated failure rate");
  annotate->add_option("--retries", f.retries, "Retries per pair");
  annotate->add_option("--policy", f.policy, "Failure policy: drop, retry or repair");

  auto* classify = app.add_subcommand("classify", "Query type distribution");
  add_io(classify, f, "Triplet or query JSONL");
  classify->add_option("--label", f.label, "Row label");

  auto* stats = app.add_subcommand("stats", "Length and novel-token statistics");
  add_io(stats, f, "Triplet JSONL");
  stats->add_option("--label", f.label, "Row label");
  stats->add_option("--ntp-mode", f.ntp_mode, "occurrence or type");

  auto* unify = app.add_subcommand("unify", "Rewrite queries as natural questions");
  add_io(unify, f, "JSONL ({id, document, query})");
  unify->add_option("--format", f.format,
                    "Query format: natural, words, phrases, sentence or instruction");
  unify->add_option("--ablation-style", f.ablation.style, "Also compare against a template: newts or duc");
  unify->add_option("--references", f.references, "Reference summaries for the ablation");
  unify->add_option("--ablation-report", f.ablation_report, "Ablation report JSON");

  auto* compose = app.add_subcommand("compose", "Multi-document query-focused summaries");
  add_io(compose, f, "Cluster JSONL ({cluster_id, query, documents})");
  compose->add_option("--budget", f.budget, "Token budget");
  compose->add_option("--threshold", f.threshold, "Overlap threshold in percent");
  compose->add_option("--overflow", f.overflow, "truncate or drop");

  auto* evaluate = app.add_subcommand("evaluate", "ROUGE-1/2/L against references");
  evaluate->add_option("-i,--input,--predictions", f.input, "Predictions JSONL ({id, text})");
  evaluate->add_option("-r,--references", f.references, "References JSONL ({id, text})");
  evaluate->add_option("-o,--output", f.output, "Report JSON");
  evaluate->add_flag("--recall", f.recall, "Use recall as the headline");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config = build_config(f);
    f.ablation.report = f.ablation_report;
    if (annotate->parsed()) return cmd_annotate(config, out);
    if (classify->parsed()) return cmd_classify(config, out);
    if (stats->parsed()) return cmd_stats(config, out);
    if (unify->parsed()) return cmd_unify(config, f.ablation, out);
    if (compose->parsed()) return cmd_compose(config, out);
    if (evaluate->parsed()) return cmd_evaluate(config, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace qfsforge::cli
