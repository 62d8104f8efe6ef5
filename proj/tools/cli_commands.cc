// Copyright 2026 The linkgen Authors.
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

#include "cli_commands.h"

#include <algorithm>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkgen/dict_loader.h"
#include "linkgen/errors.h"
#include "linkgen/evaluation.h"
#include "linkgen/generator.h"

namespace linkgen::cli {
namespace {

enum class Format { kText, kJson };

struct RunConfig {
  std::string dict_path;
  std::string corpus_path;
  std::vector<std::string> tokens;
  uint64_t seed = 1;
  size_t cap = 25;  // 0 disables the cap
  size_t max_bag = 10;
  bool walls = false;
  bool no_lowercase = false;
  bool keep_punct = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool quiet = false;
  Format format = Format::kText;
};

void AddFormat(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::kText},
                                        {"json", Format::kJson}},
          CLI::ignore_case));
}

void AddDict(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--dict", cfg.dict_path, "Master dictionary file")
      ->required();
}

void AddGeneration(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--cap", cfg.cap, "Candidate cap, 0 for none")
      ->capture_default_str();
  cmd->add_option("--max-bag", cfg.max_bag, "Largest accepted bag")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--walls", cfg.walls, "Anchor orderings at LEFT-WALL");
}

std::string Where(const LoadWarning &w) {
  return w.location.file + ":" + std::to_string(w.location.line);
}

size_t CapOf(const RunConfig &cfg) {
  return cfg.cap == 0 ? kUnlimited : cfg.cap;
}

int DictInfo(const RunConfig &cfg, std::ostream &out) {
  LoadResult loaded = LoadDictionaryFile(cfg.dict_path);
  const LoadReport &r = loaded.report;
  if (cfg.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["rules"] = r.rule_count;
    j["word_forms"] = r.word_form_count;
    j["phrases"] = r.phrase_count;
    j["macros"] = r.macro_count;
    nlohmann::ordered_json warnings = nlohmann::ordered_json::array();
    for (const LoadWarning &w : r.warnings) {
      warnings.push_back(Where(w) + ": " + w.message);
    }
    j["warnings"] = std::move(warnings);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "rules: " << r.rule_count << ", word forms: " << r.word_form_count
      << "\n";
  out << "phrases: " << r.phrase_count << ", macros: " << r.macro_count
      << "\n";
  out << "warnings: " << r.warnings.size() << "\n";
  for (const LoadWarning &w : r.warnings) {
    out << "  " << Where(w) << ": " << w.message << "\n";
  }
  return kOk;
}

int GenerateCmd(const RunConfig &cfg, std::ostream &out) {
  LoadResult loaded = LoadDictionaryFile(cfg.dict_path);
  GenerateOptions options;
  options.cap = CapOf(cfg);
  options.max_bag = cfg.max_bag;
  options.left_wall = cfg.walls;
  GenerationResult result =
      Generate(loaded.dictionary, WordBag{cfg.tokens, std::nullopt}, options);
  if (cfg.format == Format::kJson) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cands = nlohmann::ordered_json::array();
    for (const Sentence &s : result.candidates) {
      std::string line;
      for (const auto &w : s) line += (line.empty() ? "" : " ") + w;
      cands.push_back(line);
    }
    j["candidates"] = std::move(cands);
    j["outcome"] = OutcomeName(result.outcome);
    j["truncated"] = result.truncated;
    out << j.dump(2) << "\n";
  } else {
    for (const Sentence &s : result.candidates) {
      for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << "\n";
    }
    out << "outcome: " << OutcomeName(result.outcome) << "\n";
  }
  return result.candidates.empty() ? kNothingGenerated : kOk;
}

int Evaluate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  LoadResult loaded = LoadDictionaryFile(cfg.dict_path);
  Normalization norm;
  norm.lowercase = !cfg.no_lowercase;
  norm.strip_punctuation = !cfg.keep_punct;
  Corpus corpus = LoadCorpus(cfg.corpus_path, norm);
  EvalOptions options;
  options.seed = cfg.seed;
  options.cap = CapOf(cfg);
  options.max_bag = cfg.max_bag;
  options.left_wall = cfg.walls;
  options.jobs = cfg.jobs;
  if (!cfg.quiet) {
    options.progress = [&err](size_t done, size_t total) {
      err << "\r[" << done << "/" << total << "]" << std::flush;
      if (done == total) err << "\n";
    };
  }
  EvalReport report = EvaluateCorpus(loaded.dictionary, corpus, options);
  if (report.sentence_count == 0) err << "warning: corpus has no sentences\n";
  out << (cfg.format == Format::kJson ? ReportToJson(report)
                                      : ReportToText(report));
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Sentence generation with Link Grammar dictionaries", "linkgen"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App *info = app.add_subcommand("dict-info", "Summarize a dictionary");
  AddDict(info, cfg);
  AddFormat(info, cfg);

  CLI::App *gen = app.add_subcommand("generate", "Order a bag of words");
  AddDict(gen, cfg);
  AddFormat(gen, cfg);
  AddGeneration(gen, cfg);
  gen->add_option("tokens", cfg.tokens, "Words of the bag")->required();

  CLI::App *eval = app.add_subcommand("evaluate", "Evaluate over a corpus");
  AddDict(eval, cfg);
  AddFormat(eval, cfg);
  AddGeneration(eval, cfg);
  eval->add_option("--corpus", cfg.corpus_path, "One sentence per line")
      ->required();
  eval->add_option("--seed", cfg.seed, "Shuffle seed")->capture_default_str();
  eval->add_flag("--no-lowercase", cfg.no_lowercase, "Keep corpus case");
  eval->add_flag("--keep-punct", cfg.keep_punct, "Keep terminal punctuation");
  eval->add_option("--jobs", cfg.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  eval->add_flag("--quiet", cfg.quiet, "No progress output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return DictInfo(cfg, out);
    if (*gen) return GenerateCmd(cfg, out);
    return Evaluate(cfg, out, err);
  } catch (const UnknownWord &e) {
    err << "error: " << e.what() << "\n";
    return kLoadError;
  } catch (const BagTooLarge &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EmptySentence &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kLoadError;
  }
}

}  // namespace linkgen::cli
