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

#include "qfsforge_cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "qfsforge/annotate.hpp"
#include "qfsforge/compose.hpp"
#include "qfsforge/corpus.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/evaluate.hpp"
#include "qfsforge/stats.hpp"
#include "qfsforge/taxonomy.hpp"
#include "qfsforge/unify.hpp"

namespace qfsforge::cli {

namespace {

const std::filesystem::path& require_path(const std::filesystem::path& path, const char* what,
                                          const char* command) {
  if (path.empty()) {
    throw ConfigError(std::string(command) + " needs " + what);
  }
  return path;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(path.string(), "cannot open for writing");
  file << text;
  if (!file.flush()) throw IoError(path.string(), "write failed");
}

std::string label_for(const RunConfig& config) {
  return config.label.empty() ? config.input.stem().string() : config.label;
}

/// Queries from a JSONL file whose records hold "queries": [str] (triplets)
/// or "query": str (unify output).
std::vector<std::string> read_queries(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError(path.string(), "cannot open for reading");
  std::vector<std::string> queries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(path.string(), line_no, e.what());
    }
    if (const auto it = record.find("queries"); it != record.end() && it->is_array()) {
      for (const auto& q : *it) {
        if (!q.is_string()) throw FormatError(path.string(), line_no, "non-string query");
        queries.push_back(q.get<std::string>());
      }
    } else if (const auto jt = record.find("query"); jt != record.end() && jt->is_string()) {
      queries.push_back(jt->get<std::string>());
    } else {
      throw FormatError(path.string(), line_no, "record has neither 'queries' nor 'query'");
    }
  }
  return queries;
}

}  // namespace

int cmd_annotate(const RunConfig& config, std::ostream& out) {
  const auto backend = make_backend(config.backend);
  const auto& input = require_path(config.input, "an input corpus", "annotate");
  const auto& output = require_path(config.output, "an output path", "annotate");
  const std::filesystem::path audit =
      config.audit.empty() ? std::filesystem::path(output.string() + ".audit.jsonl") : config.audit;

  const auto pairs = load_corpus(input);
  const AnnotationRun run = annotate_corpus(pairs, config.prompt_book(), *backend,
                                            config.annotate_options(), config.parallelism);
  write_triplets(run.triplets(), output);

  std::string audit_lines;
  for (const auto& outcome : run.outcomes) {
    if (outcome.status != AnnotationStatus::ok || outcome.repaired) {
      audit_lines += audit_json_line(outcome) + "\n";
    }
  }
  write_text(audit, audit_lines);

  const double rate = run.counts.failure_rate();
  out << "backend: " << backend->identity() << '\n'
      << "pairs: " << run.counts.total() << "  ok: " << run.counts.ok
      << "  parse_mismatch: " << run.counts.parse_mismatch
      << "  backend_error: " << run.counts.backend_error << '\n'
      << std::fixed << std::setprecision(4) << "failure rate: " << rate
      << "  ceiling: " << config.failure_ceiling << '\n';
  if (rate > config.failure_ceiling) {
    out << "failure rate exceeds the ceiling; see " << audit.string() << '\n';
    return kExitFailureCeiling;
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  const auto& input = require_path(config.input, "an input file", "classify");
  const auto& output = require_path(config.output, "an output path", "classify");
  const auto queries = read_queries(input);
  std::vector<QueryType> types;
  types.reserve(queries.size());
  for (const auto& q : queries) types.push_back(classify_query(q));
  const QueryTypeDistribution dist = aggregate_distribution(types);

  const std::string label = label_for(config);
  write_text(output, distribution_json_line(label, dist) + "\n");
  const std::pair<std::string, QueryTypeDistribution> rows[] = {{label, dist}};
  out << format_distribution_table(rows);
  return kExitOk;
}

int cmd_stats(const RunConfig& config, std::ostream& out) {
  const auto& input = require_path(config.input, "an input triplet file", "stats");
  const auto& output = require_path(config.output, "an output path", "stats");
  const auto triplets = load_triplets(input);
  const CorpusStats stats = corpus_stats(triplets, config.ntp_mode);

  const std::string label = label_for(config);
  write_text(output, stats_json_line(label, stats) + "\n");
  const std::pair<std::string, CorpusStats> rows[] = {{label, stats}};
  out << format_stats_table(rows);
  return kExitOk;
}

int cmd_unify(const RunConfig& config, const AblationRequest& ablation, std::ostream& out) {
  const auto backend = make_backend(config.backend);
  const auto& input = require_path(config.input, "an input file", "unify");
  const auto& output = require_path(config.output, "an output path", "unify");
  std::optional<TemplateStyle> style;
  if (!ablation.style.empty()) {
    try {
      style = parse_template_style(ablation.style);
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
    require_path(config.references, "references for the ablation", "unify");
    require_path(ablation.report, "an ablation report path", "unify");
  }

  CompletionQueryGenerator generator(*backend, config.prompt_book().news,
                                     config.backend.annotation_params);
  const auto items = load_unify_items(input);
  const auto unified = unify_batch(items, config.query_format, generator, config.parallelism);
  std::string lines;
  for (const auto& u : unified) lines += unified_json_line(u) + "\n";
  write_text(output, lines);
  out << "unified " << unified.size() << " queries (format " << to_string(config.query_format)
      << ", backend " << backend->identity() << ")\n";

  if (!style) return kExitOk;

  std::unordered_map<std::string, std::vector<std::string>> refs;
  for (auto& record : load_text_records(config.references)) refs[record.id] = std::move(record.texts);
  std::vector<AblationItem> ablation_items;
  for (const auto& item : items) {
    const auto it = refs.find(item.id);
    if (it == refs.end()) throw InvalidArgument("no reference for id '" + item.id + "'");
    ablation_items.push_back({item.id, item.document, item.query, it->second});
  }
  BackendSummarizer summarizer(*backend, config.backend.summary_params, config.summary_prompt);
  const AblationReport report =
      run_unification_ablation(ablation_items, *style, generator, summarizer, config.parallelism);

  nlohmann::ordered_json j;
  j["count"] = report.rows.size();
  j["template_style"] = ablation.style;
  j["generated_f1"] = {report.generated_mean.rouge1.f1, report.generated_mean.rouge2.f1,
                       report.generated_mean.rougeL.f1};
  j["template_f1"] = {report.template_mean.rouge1.f1, report.template_mean.rouge2.f1,
                      report.template_mean.rougeL.f1};
  j["f1_delta"] = report.f1_delta;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["id"] = row.id;
    r["generated_query"] = row.generated_query;
    r["template_query"] = row.template_query;
    r["generated_f1"] = {row.generated.rouge1.f1, row.generated.rouge2.f1, row.generated.rougeL.f1};
    r["template_f1"] = {row.templated.rouge1.f1, row.templated.rouge2.f1, row.templated.rougeL.f1};
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  write_text(ablation.report, j.dump() + "\n");
  out << std::fixed << std::setprecision(4) << "ablation f1 delta (generated - template): R1 "
      << report.f1_delta[0] << "  R2 " << report.f1_delta[1] << "  RL " << report.f1_delta[2]
      << '\n';
  return kExitOk;
}

int cmd_compose(const RunConfig& config, std::ostream& out) {
  const auto backend = make_backend(config.backend);
  const auto& input = require_path(config.input, "an input cluster file", "compose");
  const auto& output = require_path(config.output, "an output path", "compose");
  CompositionConfig composition = config.composition;
  composition.parallelism = config.parallelism;
  composition.validate();

  BackendSummarizer summarizer(*backend, config.backend.summary_params, config.summary_prompt);
  const auto clusters = load_clusters(input);
  std::string lines;
  std::size_t truncated = 0;
  for (const auto& cluster : clusters) {
    const Composition result =
        compose_summary(cluster.documents, cluster.query, summarizer, composition);
    truncated += result.truncated ? 1 : 0;
    lines += composition_json_line(cluster.cluster_id, result) + "\n";
  }
  write_text(output, lines);
  out << "composed " << clusters.size() << " clusters (" << truncated
      << " truncated at the budget of " << composition.token_budget << " tokens)\n";
  return kExitOk;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out) {
  const auto& predictions = require_path(config.input, "a predictions file", "evaluate");
  const auto& references = require_path(config.references, "a references file", "evaluate");
  const auto& output = require_path(config.output, "an output path", "evaluate");
  EvaluateOptions options;
  options.recall_headline = config.recall_headline;
  options.parallelism = config.parallelism;
  const EvaluationReport report = evaluate_run(predictions, references, options);
  write_text(output, report_json(report) + "\n");
  out << format_report_table(report);
  return kExitOk;
}

}  // namespace qfsforge::cli
