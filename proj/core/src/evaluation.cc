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

#include "linkgen/evaluation.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "linkgen/dict_loader.h"
#include "linkgen/errors.h"
#include "linkgen/metrics.h"

namespace linkgen {

using Json = nlohmann::ordered_json;

Corpus ParseCorpus(std::string_view text, std::string name,
                   const Normalization &normalization) {
  Corpus corpus;
  corpus.name = std::move(name);
  corpus.normalization = normalization;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    Sentence s;
    std::string w;
    while (words >> w) {
      if (normalization.lowercase) w = ToLowerAscii(w);
      s.push_back(std::move(w));
    }
    if (s.empty()) continue;
    if (normalization.strip_punctuation) {
      std::string &last = s.back();
      while (!last.empty() &&
             (last.back() == '.' || last.back() == '!' || last.back() == '?')) {
        last.pop_back();
      }
      if (last.empty()) s.pop_back();
    }
    if (s.empty()) {
      ++corpus.dropped_lines;
      continue;
    }
    corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

Corpus LoadCorpus(const std::filesystem::path &path,
                  const Normalization &normalization) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseCorpus(text.str(), path.filename().string(), normalization);
}

void SeededShuffle(std::vector<std::string> &tokens, std::mt19937_64 &rng) {
  for (size_t i = tokens.size(); i > 1; --i) {
    // Uniform draw in [0, i) by rejection.
    const uint64_t bound = i;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    std::swap(tokens[i - 1], tokens[x % bound]);
  }
}

namespace {

SentenceResult EvaluateSentence(const Dictionary &dict, const Sentence &ref,
                                Sentence shuffled, const EvalOptions &options,
                                bool &unknown) {
  SentenceResult r;
  r.reference = ref;
  r.shuffled = std::move(shuffled);
  unknown = false;
  GenerationResult gen;
  try {
    GenerateOptions go;
    go.cap = options.cap;
    go.max_bag = options.max_bag;
    go.left_wall = options.left_wall;
    gen = Generate(dict, WordBag{r.shuffled, std::nullopt}, go);
  } catch (const UnknownWord &e) {
    unknown = true;
    r.error = e.what();
    return r;
  } catch (const Error &e) {
    r.error = e.what();
    return r;
  }
  r.outcome = ClassifyAgainstReference(gen, ref);
  r.candidates = std::move(gen.candidates);
  if (r.candidates.empty()) return r;
  double bleu = 0, wer = 0, ter = 0;
  for (const Sentence &c : r.candidates) {
    bleu += Bleu2(c, ref);
    wer += Wer(c, ref);
    ter += Ter(c, ref);
  }
  const double n = static_cast<double>(r.candidates.size());
  r.bleu2 = bleu / n;
  r.wer = wer / n;
  r.ter = ter / n;
  return r;
}

}  // namespace

EvalReport EvaluateCorpus(const Dictionary &dict, const Corpus &corpus,
                          const EvalOptions &options) {
  EvalReport report;
  report.corpus_name = corpus.name;
  report.sentence_count = corpus.sentences.size();
  report.seed = options.seed;
  report.cap = options.cap;
  report.max_bag = options.max_bag;
  report.left_wall = options.left_wall;
  report.normalization = corpus.normalization;
  if (corpus.sentences.empty()) report.warnings.push_back("empty corpus");

  // Shuffles are drawn up front in corpus order so that the worker count
  // cannot change them.
  std::mt19937_64 rng(options.seed);
  std::vector<Sentence> bags;
  for (const Sentence &s : corpus.sentences) {
    Sentence bag = s;
    SeededShuffle(bag, rng);
    bags.push_back(std::move(bag));
  }

  const size_t n = corpus.sentences.size();
  report.sentences.resize(n);
  std::vector<char> unknown(n, 0);
  std::atomic<size_t> next{0};
  std::mutex progress_mu;
  size_t done = 0;
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      bool u = false;
      report.sentences[i] = EvaluateSentence(dict, corpus.sentences[i],
                                             std::move(bags[i]), options, u);
      unknown[i] = u;
      if (options.progress) {
        std::lock_guard lock(progress_mu);
        options.progress(++done, n);
      }
    }
  };
  const unsigned jobs =
      std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }

  double bleu = 0, wer = 0, ter = 0;
  for (size_t i = 0; i < n; ++i) {
    const SentenceResult &r = report.sentences[i];
    switch (r.outcome) {
      case ReferenceOutcome::kSingleCorrect:
        ++report.tallies.single_correct;
        break;
      case ReferenceOutcome::kMultipleOneCorrect:
        ++report.tallies.multiple_one_correct;
        break;
      case ReferenceOutcome::kMultipleNoneCorrect:
        ++report.tallies.multiple_none_correct;
        break;
      case ReferenceOutcome::kNoSentences:
        ++report.tallies.no_sentences;
        break;
      case ReferenceOutcome::kTooMany:
        ++report.tallies.too_many;
        break;
    }
    if (unknown[i]) {
      ++report.unknown_word_sentences;
    } else if (r.error) {
      ++report.error_sentences;
    }
    bleu += r.bleu2;
    wer += r.wer;
    ter += r.ter;
  }
  if (n > 0) {
    const double dn = static_cast<double>(n);
    report.accuracy = static_cast<double>(report.tallies.single_correct +
                                          report.tallies.multiple_one_correct) /
                      dn;
    report.avg_bleu2 = bleu / dn;
    report.avg_wer = wer / dn;
    report.avg_ter = ter / dn;
  }
  if (report.unknown_word_sentences > 0) {
    report.warnings.push_back(std::to_string(report.unknown_word_sentences) +
                              " sentence(s) with unknown words skipped");
  }
  if (report.error_sentences > 0) {
    report.warnings.push_back(std::to_string(report.error_sentences) +
                              " sentence(s) failed to generate");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string Join(const Sentence &s) {
  std::string out;
  for (const auto &w : s) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

Sentence Split(const std::string &text) {
  Sentence s;
  std::istringstream in(text);
  std::string w;
  while (in >> w) s.push_back(w);
  return s;
}

}  // namespace

std::string ReportToText(const EvalReport &r) {
  const std::string total = "/" + std::to_string(r.sentence_count);
  auto row = [](std::string_view label, const std::string &value) {
    std::string line(label);
    line.resize(40, ' ');
    return line + value + "\n";
  };
  std::string out;
  out += "corpus: " + r.corpus_name + " (" + std::to_string(r.sentence_count) +
         " sentences, seed " + std::to_string(r.seed) + ", cap " +
         (r.cap == kUnlimited ? std::string("none") : std::to_string(r.cap)) +
         ")\n";
  out += row(kRowSingleCorrect, std::to_string(r.tallies.single_correct) + total);
  out += row(kRowMultipleOneCorrect,
             std::to_string(r.tallies.multiple_one_correct) + total);
  out += row(kRowMultipleNoneCorrect,
             std::to_string(r.tallies.multiple_none_correct) + total);
  out += row(kRowNoSentences, std::to_string(r.tallies.no_sentences) + total);
  out += row(kRowTooMany, std::to_string(r.tallies.too_many) + total);
  out += row(kRowAccuracy, Fixed(r.accuracy, 3));
  out += row(kRowBleu, Fixed(r.avg_bleu2, 3));
  out += row(kRowWer, Fixed(r.avg_wer, 3));
  out += row(kRowTer, Fixed(r.avg_ter, 3));
  out += row(kRowExternal, r.external_similarity
                               ? Fixed(*r.external_similarity, 3)
                               : std::string("n/a"));
  for (const auto &w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

std::string ReportToJson(const EvalReport &r) {
  Json j;
  j["corpus"] = r.corpus_name;
  j["sentences"] = r.sentence_count;
  Json config;
  config["seed"] = r.seed;
  config["cap"] = r.cap == kUnlimited ? Json(nullptr) : Json(r.cap);
  config["max_bag"] = r.max_bag;
  config["left_wall"] = r.left_wall;
  config["lowercase"] = r.normalization.lowercase;
  config["strip_punctuation"] = r.normalization.strip_punctuation;
  j["config"] = std::move(config);
  Json m;
  m[std::string(kRowSingleCorrect)] = r.tallies.single_correct;
  m[std::string(kRowMultipleOneCorrect)] = r.tallies.multiple_one_correct;
  m[std::string(kRowMultipleNoneCorrect)] = r.tallies.multiple_none_correct;
  m[std::string(kRowNoSentences)] = r.tallies.no_sentences;
  m[std::string(kRowTooMany)] = r.tallies.too_many;
  m[std::string(kRowAccuracy)] = r.accuracy;
  m[std::string(kRowBleu)] = r.avg_bleu2;
  m[std::string(kRowWer)] = r.avg_wer;
  m[std::string(kRowTer)] = r.avg_ter;
  m[std::string(kRowExternal)] = r.external_similarity
                                     ? Json(*r.external_similarity)
                                     : Json(nullptr);
  j["metrics"] = std::move(m);
  j["unknown_word_sentences"] = r.unknown_word_sentences;
  j["error_sentences"] = r.error_sentences;
  j["warnings"] = r.warnings;
  Json rows = Json::array();
  for (const SentenceResult &s : r.sentences) {
    Json row;
    row["reference"] = Join(s.reference);
    row["shuffled"] = Join(s.shuffled);
    row["outcome"] = OutcomeName(s.outcome);
    Json cands = Json::array();
    for (const Sentence &c : s.candidates) cands.push_back(Join(c));
    row["candidates"] = std::move(cands);
    row["bleu2"] = s.bleu2;
    row["wer"] = s.wer;
    row["ter"] = s.ter;
    row["error"] = s.error ? Json(*s.error) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["per_sentence"] = std::move(rows);
  return j.dump(2) + "\n";
}

EvalReport ReportFromJson(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    EvalReport r;
    r.corpus_name = j.at("corpus").get<std::string>();
    r.sentence_count = j.at("sentences").get<size_t>();
    const Json &c = j.at("config");
    r.seed = c.at("seed").get<uint64_t>();
    r.cap = c.at("cap").is_null() ? kUnlimited : c.at("cap").get<size_t>();
    r.max_bag = c.at("max_bag").get<size_t>();
    r.left_wall = c.at("left_wall").get<bool>();
    r.normalization.lowercase = c.at("lowercase").get<bool>();
    r.normalization.strip_punctuation = c.at("strip_punctuation").get<bool>();
    const Json &m = j.at("metrics");
    auto count = [&](std::string_view key) {
      return m.at(std::string(key)).get<size_t>();
    };
    auto real = [&](std::string_view key) {
      return m.at(std::string(key)).get<double>();
    };
    r.tallies.single_correct = count(kRowSingleCorrect);
    r.tallies.multiple_one_correct = count(kRowMultipleOneCorrect);
    r.tallies.multiple_none_correct = count(kRowMultipleNoneCorrect);
    r.tallies.no_sentences = count(kRowNoSentences);
    r.tallies.too_many = count(kRowTooMany);
    r.accuracy = real(kRowAccuracy);
    r.avg_bleu2 = real(kRowBleu);
    r.avg_wer = real(kRowWer);
    r.avg_ter = real(kRowTer);
    const Json &ext = m.at(std::string(kRowExternal));
    if (!ext.is_null()) r.external_similarity = ext.get<double>();
    r.unknown_word_sentences = j.at("unknown_word_sentences").get<size_t>();
    r.error_sentences = j.at("error_sentences").get<size_t>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const Json &row : j.at("per_sentence")) {
      SentenceResult s;
      s.reference = Split(row.at("reference").get<std::string>());
      s.shuffled = Split(row.at("shuffled").get<std::string>());
      auto outcome = ParseReferenceOutcome(row.at("outcome").get<std::string>());
      if (!outcome) throw Error("unknown outcome in report");
      s.outcome = *outcome;
      for (const Json &cand : row.at("candidates")) {
        s.candidates.push_back(Split(cand.get<std::string>()));
      }
      s.bleu2 = row.at("bleu2").get<double>();
      s.wer = row.at("wer").get<double>();
      s.ter = row.at("ter").get<double>();
      if (!row.at("error").is_null()) s.error = row.at("error").get<std::string>();
      r.sentences.push_back(std::move(s));
    }
    return r;
  } catch (const Json::exception &e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace linkgen
