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

#include "qfsforge_cli/run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "qfsforge/error.hpp"
#include "qfsforge/http_backend.hpp"
#include "qfsforge/mock_backend.hpp"

namespace qfsforge::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& object, std::string_view where,
                    std::initializer_list<std::string_view> known) {
  if (!object.is_object()) throw ConfigError(std::string(where) + " must be an object");
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || k == key;
    if (!ok) throw ConfigError("unknown key '" + key + "' in " + std::string(where));
  }
}

template <class T>
T get(const json& object, const char* key, std::string_view where) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string(where) + "." + key + " has the wrong type");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
  std::filesystem::path p(value);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

CompletionParams parse_params(const json& j, CompletionParams params, std::string_view where) {
  reject_unknown(j, where, {"max_tokens", "temperature", "top_p", "stop"});
  if (j.contains("max_tokens")) params.max_tokens = get<std::size_t>(j, "max_tokens", where);
  if (j.contains("temperature")) params.temperature = get<double>(j, "temperature", where);
  if (j.contains("top_p")) params.top_p = get<double>(j, "top_p", where);
  if (j.contains("stop")) params.stop_sequences = get<std::vector<std::string>>(j, "stop", where);
  try {
    params.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string(where) + ": " + e.what());
  }
  return params;
}

SentenceList sentence_list(const json& object, const char* key, std::string_view where) {
  const json& value = object.at(key);
  if (value.is_string()) return segment_sentences(value.get<std::string>());
  return get<std::vector<std::string>>(object, key, where);
}

OneShotExample parse_example(const json& j, Domain domain, QueryMode mode, std::string_view where) {
  reject_unknown(j, where, {"document", "summary", "queries"});
  for (const char* key : {"document", "summary", "queries"}) {
    if (!j.contains(key)) throw ConfigError(std::string(where) + " is missing '" + key + "'");
  }
  OneShotExample example;
  example.document = get<std::string>(j, "document", where);
  example.summary_sentences = sentence_list(j, "summary", where);
  example.query_sentences = sentence_list(j, "queries", where);
  example.domain = domain;
  example.mode = mode;
  return example;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

PromptSpec parse_prompt(const json& j, Domain domain, QueryMode mode,
                        const std::filesystem::path& base, std::string_view where) {
  reject_unknown(j, where,
                 {"instruction", "example", "example_path", "labels", "max_document_tokens"});
  PromptSpec spec = default_prompt_spec(domain, mode);
  if (j.contains("instruction")) spec.instruction = get<std::string>(j, "instruction", where);
  if (j.contains("example") && j.contains("example_path")) {
    throw ConfigError(std::string(where) + ": give either 'example' or 'example_path'");
  }
  if (j.contains("example")) {
    spec.example = parse_example(j.at("example"), domain, mode, std::string(where) + ".example");
  }
  if (j.contains("example_path")) {
    const auto path = resolve(base, get<std::string>(j, "example_path", where));
    spec.example = parse_example(read_json_file(path), domain, mode, path.string());
  }
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    const std::string lw = std::string(where) + ".labels";
    reject_unknown(labels, lw, {"article", "dialogue", "summary", "questions"});
    if (labels.contains("article")) spec.labels.news_document = get<std::string>(labels, "article", lw);
    if (labels.contains("dialogue")) {
      spec.labels.dialogue_document = get<std::string>(labels, "dialogue", lw);
    }
    if (labels.contains("summary")) spec.labels.summary = get<std::string>(labels, "summary", lw);
    if (labels.contains("questions")) {
      spec.labels.questions = get<std::string>(labels, "questions", lw);
    }
  }
  if (j.contains("max_document_tokens")) {
    spec.max_document_tokens = get<std::size_t>(j, "max_document_tokens", where);
  }
  try {
    validate(spec);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string(where) + ": " + e.what());
  }
  return spec;
}

template <class Fn>
auto enum_value(const json& object, const char* key, std::string_view where, Fn parse) {
  const auto text = get<std::string>(object, key, where);
  try {
    return parse(text);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string(where) + "." + key + ": " + e.what());
  }
}

}  // namespace

PromptBook RunConfig::prompt_book() const {
  PromptBook book = PromptBook::defaults(mode);
  if (news_prompt) book.news = *news_prompt;
  if (dialogue_prompt) book.dialogue = *dialogue_prompt;
  return book;
}

AnnotateOptions RunConfig::annotate_options() const {
  AnnotateOptions options;
  options.retries = retries;
  options.policy = failure_policy;
  options.params = backend.annotation_params;
  return options;
}

RunConfig parse_run_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
  }
  reject_unknown(root, "config",
                 {"backend", "mode", "parallelism", "retries", "failure_policy", "failure_ceiling",
                  "paths", "prompts", "composition", "query_format", "ntp_mode",
                  "recall_headline", "label"});

  RunConfig config;
  if (root.contains("mode")) config.mode = enum_value(root, "mode", "config", parse_query_mode);
  if (root.contains("parallelism")) {
    config.parallelism = get<std::size_t>(root, "parallelism", "config");
    if (config.parallelism == 0) throw ConfigError("config.parallelism must be >= 1");
  }
  if (root.contains("retries")) config.retries = get<std::size_t>(root, "retries", "config");
  if (root.contains("failure_policy")) {
    config.failure_policy = enum_value(root, "failure_policy", "config", parse_failure_policy);
  }
  if (root.contains("failure_ceiling")) {
    config.failure_ceiling = get<double>(root, "failure_ceiling", "config");
    if (!(config.failure_ceiling >= 0.0 && config.failure_ceiling <= 1.0)) {
      throw ConfigError("config.failure_ceiling must be within [0, 1]");
    }
  }
  if (root.contains("query_format")) {
    config.query_format = enum_value(root, "query_format", "config", parse_query_format);
  }
  if (root.contains("ntp_mode")) {
    config.ntp_mode = enum_value(root, "ntp_mode", "config", [](const std::string& s) {
      if (s == "occurrence") return NtpMode::occurrence;
      if (s == "type") return NtpMode::type;
      throw InvalidArgument("expected 'occurrence' or 'type'");
    });
  }
  if (root.contains("recall_headline")) {
    config.recall_headline = get<bool>(root, "recall_headline", "config");
  }
  if (root.contains("label")) config.label = get<std::string>(root, "label", "config");

  if (root.contains("backend")) {
    const json& b = root.at("backend");
    reject_unknown(b, "backend",
                   {"kind", "endpoint", "script", "seed", "timeout_ms", "annotation_params",
                    "summary_params"});
    BackendConfig& bc = config.backend;
    if (b.contains("kind")) {
      bc.kind = enum_value(b, "kind", "backend", [](const std::string& s) {
        if (s == "mock") return BackendKind::mock;
        if (s == "live") return BackendKind::live;
        throw InvalidArgument("expected 'mock' or 'live'");
      });
    }
    if (b.contains("endpoint")) bc.endpoint = get<std::string>(b, "endpoint", "backend");
    if (b.contains("script")) bc.script = resolve(base_dir, get<std::string>(b, "script", "backend"));
    if (b.contains("seed")) bc.seed = get<std::uint64_t>(b, "seed", "backend");
    if (b.contains("timeout_ms")) {
      bc.timeout_ms = get<int>(b, "timeout_ms", "backend");
      if (bc.timeout_ms <= 0) throw ConfigError("backend.timeout_ms must be positive");
    }
    if (b.contains("annotation_params")) {
      bc.annotation_params =
          parse_params(b.at("annotation_params"), bc.annotation_params, "backend.annotation_params");
    }
    if (b.contains("summary_params")) {
      bc.summary_params =
          parse_params(b.at("summary_params"), bc.summary_params, "backend.summary_params");
    }
  }

  if (root.contains("paths")) {
    const json& p = root.at("paths");
    reject_unknown(p, "paths", {"input", "output", "audit", "references"});
    if (p.contains("input")) config.input = resolve(base_dir, get<std::string>(p, "input", "paths"));
    if (p.contains("output")) config.output = resolve(base_dir, get<std::string>(p, "output", "paths"));
    if (p.contains("audit")) config.audit = resolve(base_dir, get<std::string>(p, "audit", "paths"));
    if (p.contains("references")) {
      config.references = resolve(base_dir, get<std::string>(p, "references", "paths"));
    }
  }

  if (root.contains("prompts")) {
    const json& p = root.at("prompts");
    reject_unknown(p, "prompts", {"news", "dialogue"});
    if (p.contains("news")) {
      config.news_prompt = parse_prompt(p.at("news"), Domain::news, config.mode, base_dir, "prompts.news");
    }
    if (p.contains("dialogue")) {
      config.dialogue_prompt =
          parse_prompt(p.at("dialogue"), Domain::dialogue, config.mode, base_dir, "prompts.dialogue");
    }
  }

  if (root.contains("composition")) {
    const json& c = root.at("composition");
    reject_unknown(c, "composition", {"overlap_threshold", "token_budget", "overflow", "summary_prompt"});
    CompositionConfig& cc = config.composition;
    if (c.contains("overlap_threshold")) {
      cc.overlap_threshold = get<double>(c, "overlap_threshold", "composition");
    }
    if (c.contains("token_budget")) cc.token_budget = get<std::size_t>(c, "token_budget", "composition");
    if (c.contains("overflow")) {
      cc.overflow = enum_value(c, "overflow", "composition", [](const std::string& s) {
        if (s == "truncate") return OverflowPolicy::truncate;
        if (s == "drop") return OverflowPolicy::drop;
        throw InvalidArgument("expected 'truncate' or 'drop'");
      });
    }
    if (c.contains("summary_prompt")) {
      config.summary_prompt = enum_value(c, "summary_prompt", "composition", [](const std::string& s) {
        if (s == "qfs_input") return BackendSummarizer::PromptStyle::qfs_input;
        if (s == "zero_shot") return BackendSummarizer::PromptStyle::zero_shot;
        throw InvalidArgument("expected 'qfs_input' or 'zero_shot'");
      });
    }
    try {
      cc.validate();
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("composition: ") + e.what());
    }
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str(), path.parent_path());
}

std::unique_ptr<CompletionBackend> make_backend(const BackendConfig& config) {
  if (config.kind == BackendKind::live) {
    if (config.endpoint.empty()) throw ConfigError("live backend requires backend.endpoint");
    const char* key = std::getenv(kApiKeyEnv);
    if (key == nullptr || *key == '\0') {
      throw ConfigError(std::string("live backend requires the ") + kApiKeyEnv +
                        " environment variable");
    }
    HttpBackend::Options options;
    options.endpoint = config.endpoint;
    options.api_key = key;
    options.timeout = std::chrono::milliseconds(config.timeout_ms);
    return std::make_unique<HttpBackend>(std::move(options));
  }

  if (config.script.empty() && !config.seed) {
    throw ConfigError("mock backend requires backend.script or a seed");
  }
  MockBackend::Script script;
  if (!config.script.empty()) script = MockBackend::load_script(config.script);
  if (config.seed) script.seed = *config.seed;
  return std::make_unique<MockBackend>(std::move(script));
}

}  // namespace qfsforge::cli
