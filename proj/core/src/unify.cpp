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

#include "qfsforge/unify.hpp"

#include <cctype>

#include <json.hpp>

#include "jsonl.hpp"
#include "qfsforge/annotate.hpp"
#include "qfsforge/error.hpp"
#include "qfsforge/numeric.hpp"
#include "qfsforge/parallel.hpp"
#include "qfsforge/text.hpp"

namespace qfsforge {

using nlohmann::json;

CompletionQueryGenerator::CompletionQueryGenerator(CompletionBackend& backend, PromptSpec spec,
                                                   CompletionParams params)
    : backend_(backend), spec_(std::move(spec)), params_(std::move(params)) {
  validate(spec_);
  params_.validate();
}

std::string CompletionQueryGenerator::generate_query(std::string_view document,
                                                     std::string_view pseudo_summary,
                                                     std::size_t index) {
  DocumentSummaryPair pair{"unify", std::string(document), std::string(pseudo_summary),
                           spec_.domain()};
  const AnnotationPrompt prompt = build_annotation_prompt(pair, spec_);
  return backend_.complete(prompt.text, params_, {index, 0});
}

std::string unify_query(std::string_view document, std::string_view raw_query,
                        GeneratorBackend& generator, std::size_t index) {
  if (is_blank(document)) throw InvalidArgument("unify_query: empty document");
  if (is_blank(raw_query)) throw InvalidArgument("unify_query: empty query");
  const std::string generated = generator.generate_query(document, raw_query, index);

  const auto numbered = parse_numbered_prefix(generated, QueryMode::wh);
  if (!numbered.empty()) {
    std::string joined;
    for (const auto& q : numbered) {
      if (!joined.empty()) joined.push_back('\n');
      joined += q;
    }
    return joined;
  }
  const std::string_view text = trim(generated);
  if (text.empty()) throw Error("unify_query: generator returned an empty query");
  return std::string(text);
}

TemplateStyle parse_template_style(std::string_view text) {
  if (text == "newts") return TemplateStyle::newts;
  if (text == "duc") return TemplateStyle::duc;
  throw InvalidArgument("unknown template style '" + std::string(text) + "'");
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::string duc_template(std::string_view raw) {
  static constexpr std::pair<std::string_view, std::string_view> kVerbs[] = {
      {"describe", "What is"}, {"identify", "What are"}, {"discuss", "What about"}};

  std::string out;
  const std::size_t space = raw.find_first_of(" \t\n");
  const std::string_view head = raw.substr(0, space);
  bool mapped = false;
  for (const auto& [verb, question] : kVerbs) {
    if (iequals(head, verb)) {
      out = question;
      out += space == std::string_view::npos ? std::string_view{} : raw.substr(space);
      mapped = true;
      break;
    }
  }
  if (!mapped) out = raw;

  if (out.back() == '.') {
    out.back() = '?';
  } else if (out.back() != '?') {
    out.push_back('?');
  }
  return out;
}

}  // namespace

std::string template_fallback(std::string_view raw_query, TemplateStyle style) {
  const std::string_view raw = trim(raw_query);
  if (raw.empty()) throw InvalidArgument("template_fallback: empty query");
  if (style == TemplateStyle::newts) {
    return "What does the article say about " + std::string(raw) + "?";
  }
  return duc_template(raw);
}

std::string_view to_string(QueryFormat format) {
  switch (format) {
    case QueryFormat::natural: return "natural";
    case QueryFormat::words: return "words";
    case QueryFormat::phrases: return "phrases";
    case QueryFormat::sentence: return "sentence";
    case QueryFormat::instruction: return "instruction";
  }
  return "natural";
}

QueryFormat parse_query_format(std::string_view text) {
  for (QueryFormat f : {QueryFormat::natural, QueryFormat::words, QueryFormat::phrases,
                        QueryFormat::sentence, QueryFormat::instruction}) {
    if (to_string(f) == text) return f;
  }
  throw InvalidArgument("unknown query format '" + std::string(text) + "'");
}

std::vector<UnifyItem> load_unify_items(const std::filesystem::path& path) {
  std::vector<UnifyItem> items;
  jsonl::for_each_record(path, [&](const json& record, std::size_t line) {
    UnifyItem item;
    item.id = jsonl::required_string(record, "id", path, line);
    item.document = jsonl::required_string(record, "document", path, line);
    item.query = jsonl::required_string(record, "query", path, line);
    items.push_back(std::move(item));
  });
  return items;
}

std::vector<UnifiedQuery> unify_batch(std::span<const UnifyItem> items, QueryFormat format,
                                      GeneratorBackend& generator, std::size_t parallelism) {
  std::vector<UnifiedQuery> out(items.size());
  parallel_for(items.size(), parallelism, [&](std::size_t i) {
    const UnifyItem& item = items[i];
    out[i].id = item.id;
    out[i].raw_query = item.query;
    out[i].query = needs_unification(format)
                       ? unify_query(item.document, item.query, generator, i)
                       : item.query;
  });
  return out;
}

std::string unified_json_line(const UnifiedQuery& item) {
  nlohmann::ordered_json record;
  record["id"] = item.id;
  record["raw_query"] = item.raw_query;
  record["query"] = item.query;
  return record.dump();
}

namespace {

RougeTriple mean_triple(const std::vector<AblationRow>& rows, RougeTriple AblationRow::*side) {
  RougeTriple mean;
  for (RougeScore RougeTriple::*metric : {&RougeTriple::rouge1, &RougeTriple::rouge2,
                                          &RougeTriple::rougeL}) {
    std::vector<double> p, r, f;
    for (const auto& row : rows) {
      const RougeScore& s = row.*side.*metric;
      p.push_back(s.precision);
      r.push_back(s.recall);
      f.push_back(s.f1);
    }
    RougeScore& m = mean.*metric;
    m.precision = pairwise_mean(p);
    m.recall = pairwise_mean(r);
    m.f1 = pairwise_mean(f);
    m.empty = rows.empty();
  }
  return mean;
}

}  // namespace

AblationReport run_unification_ablation(std::span<const AblationItem> items, TemplateStyle style,
                                        GeneratorBackend& generator, Summarizer& summarizer,
                                        std::size_t parallelism) {
  AblationReport report;
  report.rows.resize(items.size());
  parallel_for(items.size(), parallelism, [&](std::size_t i) {
    const AblationItem& item = items[i];
    if (item.references.empty()) {
      throw InvalidArgument("ablation item '" + item.id + "' has no references");
    }
    AblationRow& row = report.rows[i];
    row.id = item.id;
    row.generated_query = unify_query(item.document, item.raw_query, generator, i);
    row.template_query = template_fallback(item.raw_query, style);
    // Summarizer indices 2i and 2i+1 keep the two calls distinguishable.
    const std::string gen_summary = summarizer.summarize(row.generated_query, item.document, 2 * i);
    const std::string tpl_summary =
        summarizer.summarize(row.template_query, item.document, 2 * i + 1);
    row.generated = rouge_all_multi(gen_summary, item.references);
    row.templated = rouge_all_multi(tpl_summary, item.references);
  });

  report.generated_mean = mean_triple(report.rows, &AblationRow::generated);
  report.template_mean = mean_triple(report.rows, &AblationRow::templated);
  std::array<std::vector<double>, 3> deltas;
  for (const auto& row : report.rows) {
    deltas[0].push_back(row.generated.rouge1.f1 - row.templated.rouge1.f1);
    deltas[1].push_back(row.generated.rouge2.f1 - row.templated.rouge2.f1);
    deltas[2].push_back(row.generated.rougeL.f1 - row.templated.rougeL.f1);
  }
  for (std::size_t k = 0; k < 3; ++k) report.f1_delta[k] = pairwise_mean(deltas[k]);
  return report;
}

}  // namespace qfsforge
