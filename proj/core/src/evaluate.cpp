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

#include "qfsforge/evaluate.hpp"

#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "jsonl.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/numeric.hpp"
#include "qfsforge/parallel.hpp"

namespace qfsforge {

using nlohmann::json;

std::vector<TextRecord> load_text_records(const std::filesystem::path& path) {
  std::vector<TextRecord> records;
  jsonl::for_each_record(path, [&](const json& record, std::size_t line) {
    TextRecord out;
    const char* id_key = record.contains("id") ? "id" : "cluster_id";
    const char* text_key = record.contains("text") ? "text" : "summary";
    out.id = jsonl::required_string(record, id_key, path, line);
    const auto it = record.find(text_key);
    if (it != record.end() && it->is_array()) {
      out.texts = jsonl::required_string_array(record, text_key, path, line);
      if (out.texts.empty()) throw FormatError(path.string(), line, "empty reference list");
    } else {
      out.texts.push_back(jsonl::required_string(record, text_key, path, line));
    }
    records.push_back(std::move(out));
  });
  return records;
}

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  const std::size_t shown = std::min<std::size_t>(ids.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  if (ids.size() > shown) out += ", ... (" + std::to_string(ids.size() - shown) + " more)";
  return out;
}

RougeScore mean_of(std::span<const ExampleScore> examples, RougeScore RougeTriple::*metric) {
  std::vector<double> p, r, f;
  for (const auto& e : examples) {
    const RougeScore& s = e.scores.*metric;
    p.push_back(s.precision);
    r.push_back(s.recall);
    f.push_back(s.f1);
  }
  RougeScore mean;
  mean.precision = pairwise_mean(p);
  mean.recall = pairwise_mean(r);
  mean.f1 = pairwise_mean(f);
  mean.empty = examples.empty();
  return mean;
}

}  // namespace

EvaluationReport evaluate(std::span<const TextRecord> predictions,
                          std::span<const TextRecord> references, const EvaluateOptions& options) {
  std::unordered_map<std::string, const TextRecord*> by_id;
  std::vector<std::string> duplicates;
  for (const auto& ref : references) {
    if (!by_id.emplace(ref.id, &ref).second) duplicates.push_back(ref.id);
  }
  std::unordered_set<std::string> seen;
  std::vector<std::string> missing;
  for (const auto& pred : predictions) {
    if (!seen.insert(pred.id).second) duplicates.push_back(pred.id);
    if (!by_id.contains(pred.id)) missing.push_back(pred.id);
  }
  std::vector<std::string> unmatched;
  for (const auto& ref : references) {
    if (!seen.contains(ref.id)) unmatched.push_back(ref.id);
  }

  std::string problems;
  if (predictions.size() != references.size()) {
    problems += std::to_string(predictions.size()) + " predictions vs " +
                std::to_string(references.size()) + " references; ";
  }
  if (!duplicates.empty()) problems += "duplicate ids: " + join_ids(duplicates) + "; ";
  if (!missing.empty()) problems += "predictions without reference: " + join_ids(missing) + "; ";
  if (!unmatched.empty()) problems += "references without prediction: " + join_ids(unmatched) + "; ";
  if (!problems.empty()) {
    problems.resize(problems.size() - 2);
    throw InvalidArgument("evaluate: " + problems);
  }

  EvaluationReport report;
  report.recall_headline = options.recall_headline;
  report.examples.resize(predictions.size());
  parallel_for(predictions.size(), std::max<std::size_t>(1, options.parallelism),
               [&](std::size_t i) {
                 const auto& pred = predictions[i];
                 const auto& ref = *by_id.at(pred.id);
                 report.examples[i] = {pred.id, rouge_all_multi(pred.texts.front(), ref.texts,
                                                                options.recall_headline)};
               });
  report.mean.rouge1 = mean_of(report.examples, &RougeTriple::rouge1);
  report.mean.rouge2 = mean_of(report.examples, &RougeTriple::rouge2);
  report.mean.rougeL = mean_of(report.examples, &RougeTriple::rougeL);
  return report;
}

EvaluationReport evaluate_run(const std::filesystem::path& predictions,
                              const std::filesystem::path& references,
                              const EvaluateOptions& options) {
  const auto preds = load_text_records(predictions);
  const auto refs = load_text_records(references);
  return evaluate(preds, refs, options);
}

std::string format_report_table(const EvaluationReport& report) {
  std::ostringstream out;
  out << "examples: " << report.examples.size() << "  headline: "
      << (report.recall_headline ? "recall" : "f1") << '\n';
  out << std::left << std::setw(8) << "metric" << std::right << std::setw(11) << "precision"
      << std::setw(11) << "recall" << std::setw(11) << "f1" << '\n';
  out << std::fixed << std::setprecision(4);
  const std::pair<const char*, const RougeScore*> rows[] = {
      {"rouge1", &report.mean.rouge1}, {"rouge2", &report.mean.rouge2}, {"rougeL", &report.mean.rougeL}};
  for (const auto& [name, score] : rows) {
    out << std::left << std::setw(8) << name << std::right << std::setw(11) << score->precision
        << std::setw(11) << score->recall << std::setw(11) << score->f1 << '\n';
  }
  return out.str();
}

namespace {

nlohmann::ordered_json score_json(const RougeScore& s) {
  nlohmann::ordered_json j;
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["f1"] = s.f1;
  return j;
}

nlohmann::ordered_json triple_json(const RougeTriple& t) {
  nlohmann::ordered_json j;
  j["rouge1"] = score_json(t.rouge1);
  j["rouge2"] = score_json(t.rouge2);
  j["rougeL"] = score_json(t.rougeL);
  return j;
}

}  // namespace

std::string report_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["count"] = report.examples.size();
  j["headline"] = report.recall_headline ? "recall" : "f1";
  j["mean"] = triple_json(report.mean);
  auto examples = nlohmann::ordered_json::array();
  for (const auto& e : report.examples) {
    auto item = triple_json(e.scores);
    item["id"] = e.id;
    examples.push_back(std::move(item));
  }
  j["examples"] = std::move(examples);
  return j.dump();
}

}  // namespace qfsforge
