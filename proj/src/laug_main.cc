// src/laug_main.cc

// Copyright 2026 The LAUG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// laug: command line front end.
//
//   laug augment  --in corpus.json --out aug.json --method sd --seed 7
//   laug compose  --in corpus.json --out train_aug.json --ratio 1.0
//   laug stats    --in corpus.json --aug aug.json [--out stats.json]
//   laug eval     --in corpus.json --predictions pred.json [--out f1.json]
//   laug baseline --in corpus.json [--out baseline.json]
//   laug import-multiwoz --in data.json --out corpus.json
//
// Exit status: 0 success, 2 invalid input or configuration, 3 I/O or
// paraphrase service failure.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "laug/error.h"
#include "laug/pipeline.h"
#include "laug/utf8.h"

namespace {

using namespace laug;
using nlohmann::json;

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct Options {
  RunConfig cfg;
  std::string in, out, aug, predictions, methods = "all", split = "all";
  std::string val_list, test_list;
  bool strict = false;
};

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<Method> ParseMethods(const std::string& spec) {
  if (Lower(spec) == "all") return {Method::kWP, Method::kTP, Method::kSR, Method::kSD};
  std::vector<Method> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = ParseMethod(utf8::Trim(item));
    if (!m) throw ValidationError("method: unknown method '" + item + "'");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw ValidationError("method: at least one method is required");
  return out;
}

void AddRunFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--in", o.in, "input corpus (native JSON)")->required();
  cmd->add_option("--seed", o.cfg.seed, "random seed");
  cmd->add_option("--method", o.methods, "WP, TP, SR, SD, a comma list, or all");
  cmd->add_option("--alpha", o.cfg.wp.alpha, "WP edits per word");
  cmd->add_option("--p-svr", o.cfg.wp.p_svr, "WP slot value replacement probability");
  cmd->add_option("--p-confuse", o.cfg.sr.p_confuse, "SR similar-sound probability per word");
  cmd->add_option("--p-liaison", o.cfg.sr.p_liaison, "SR liaison probability per word pair");
  cmd->add_option("--sr-threshold", o.cfg.sr.redetect_threshold, "SR value re-detection score");
  cmd->add_option("--sd-dist", o.cfg.sd_dist, "SD disfluency distribution file");
  cmd->add_option("--tp-endpoint", o.cfg.tp_endpoint,
                  "paraphrase service URL (default: $LAUG_TP_ENDPOINT, else templates)");
  cmd->add_option("--tp-timeout", o.cfg.tp_timeout, "paraphrase service timeout, seconds");
  cmd->add_option("--resources", o.cfg.resources, "resource directory");
  cmd->add_option("--context", o.cfg.context, "LU context window m");
  cmd->add_option("--threads", o.cfg.threads, "worker threads (0: all cores)");
  cmd->add_flag("--strict", o.strict, "fail on the first invalid dialog instead of skipping it");
}

void Prepare(Options& o) {
  o.cfg.methods = ParseMethods(o.methods);
  if (o.cfg.tp_endpoint.empty())
    if (const char* env = std::getenv("LAUG_TP_ENDPOINT")) o.cfg.tp_endpoint = env;
  o.cfg.Validate();
}

Corpus Load(const Options& o) {
  Corpus c = LoadCorpus(o.in, {o.strict});
  for (const auto& issue : c.issues) std::cerr << "warning: quarantined " << issue.ToString() << "\n";
  return c;
}

void Emit(const Options& o, const std::string& command, const json& report,
          std::vector<std::filesystem::path> inputs) {
  if (o.out.empty()) {
    std::cout << report.dump(1) << "\n";
    return;
  }
  WriteFileAtomic(o.out, report.dump(1) + "\n");
  WriteManifest(o.out, command, o.cfg, inputs);
}

int RunAugment(Options& o) {
  Prepare(o);
  const Corpus c = Load(o);
  Augmenter aug(c, o.cfg);
  std::vector<Split> splits = {Split::kTrain, Split::kValidation, Split::kTest};
  if (o.split != "all") {
    auto s = ParseSplit(o.split);
    if (!s) throw ValidationError("split: unknown split '" + o.split + "'");
    splits = {*s};
  }
  Corpus out;
  out.ontology = c.ontology;
  std::map<std::string, std::string> counts;
  for (Method m : o.cfg.methods) {
    std::size_t n = 0;
    for (Split s : splits) {
      Corpus part = AugmentSplit(c, m, s, aug);
      n += part.dialogs.size();
      for (auto& d : part.dialogs) out.dialogs.push_back(std::move(d));
    }
    counts["records_" + std::string(MethodName(m))] = std::to_string(n);
    std::cerr << MethodName(m) << ": " << n << " records\n";
  }
  Finalize(out);
  SaveCorpus(out, o.out);
  WriteManifest(o.out, "augment", o.cfg, {o.in}, counts);
  return 0;
}

int RunCompose(Options& o) {
  Prepare(o);
  const Corpus c = Load(o);
  Augmenter aug(c, o.cfg);
  ComposeResult res = ComposeAugmentedSet(c, o.cfg, aug);
  SaveCorpus(res.corpus, o.out);
  std::map<std::string, std::string> extra{{"target", std::to_string(res.target)}};
  for (const auto& [m, n] : res.counts) {
    extra["records_" + std::string(MethodName(m))] = std::to_string(n);
    std::cerr << MethodName(m) << ": " << n << " records\n";
  }
  WriteManifest(o.out, "compose", o.cfg, {o.in}, extra);
  return 0;
}

int RunStats(Options& o) {
  const Corpus orig = Load(o);
  const Corpus augc = LoadCorpus(o.aug);
  const auto records = RecordsFromCorpus(augc);
  std::map<std::string, std::vector<AugmentationRecord>> by_method;
  for (const auto& r : records) by_method[std::string(MethodName(r.method))].push_back(r);
  std::map<std::string, ChangeRateReport> rows;
  json report;
  for (const auto& [name, recs] : by_method) {
    rows[name] = ChangeRates(orig, recs);
    report["change_rates"][name] = json::parse(ChangeRateJson(rows[name]));
  }
  if (rows.empty()) report["change_rates"] = json::object();
  std::cerr << ChangeRateTable(rows);
  Emit(o, "stats", report, {o.in, o.aug});
  return 0;
}

DaSet ParseDaSet(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array of DA items");
  DaSet out;
  for (const auto& x : arr) {
    if (!x.is_object()) throw ParseError(where + ": DA item must be an object");
    out.push_back({x.value("domain", ""), x.value("intent", ""), x.value("slot", ""),
                   x.value("value", "")});
  }
  return out;
}

// Predictions: [{"dialog_id": ..., "turn": n, "da": [...]}, ...] covering
// every example of the split.
int RunEval(Options& o) {
  const Corpus c = Load(o);
  std::optional<Split> split;
  if (o.split != "all") {
    split = ParseSplit(o.split);
    if (!split) throw ValidationError("split: unknown split '" + o.split + "'");
  }
  json preds;
  try {
    preds = json::parse(ReadFile(o.predictions));
  } catch (const json::exception& e) {
    throw ParseError(o.predictions + ": " + e.what());
  }
  if (!preds.is_array()) throw ParseError(o.predictions + ": expected an array");
  std::map<std::pair<std::string, std::size_t>, DaSet> by_key;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const auto& p = preds[i];
    const std::string where = o.predictions + "[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("dialog_id") || !p.contains("turn") || !p.contains("da"))
      throw ParseError(where + ": needs dialog_id, turn and da");
    by_key[{p["dialog_id"].get<std::string>(), p["turn"].get<std::size_t>()}] =
        ParseDaSet(p["da"], where + ".da");
  }
  std::vector<DaSet> pred, gold;
  for (const auto& ex : ExtractLuExamples(c, o.cfg.context, split)) {
    auto it = by_key.find({ex.dialog_id, ex.turn});
    if (it == by_key.end())
      throw ValidationError("predictions: no entry for " + ex.dialog_id + " turn " +
                            std::to_string(ex.turn));
    pred.push_back(it->second);
    gold.push_back(ex.gold);
  }
  const F1Report r = OverallF1(pred, gold);
  std::cerr << F1Table({{"eval", r}});
  Emit(o, "eval", json{{"f1", json::parse(F1Json(r))}}, {o.in, o.predictions});
  return 0;
}

int RunBaselineCmd(Options& o) {
  Prepare(o);
  const Corpus c = Load(o);
  Augmenter aug(c, o.cfg);
  const BaselineResult res = RunBaseline(c, o.cfg, aug);
  std::map<std::string, F1Report> rows{{"Ori", res.original}};
  json report;
  report["f1"]["Ori"] = json::parse(F1Json(res.original));
  for (const auto& [m, r] : res.augmented) {
    rows[std::string(MethodName(m))] = r;
    report["f1"][std::string(MethodName(m))] = json::parse(F1Json(r));
  }
  std::cerr << F1Table(rows);
  Emit(o, "baseline", report, {o.in});
  return 0;
}

std::vector<std::string> ReadIdList(const std::string& path) {
  std::vector<std::string> ids;
  if (path.empty()) return ids;
  std::stringstream ss(ReadFile(path));
  std::string line;
  while (std::getline(ss, line)) {
    line = utf8::Trim(line);
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

int RunImport(Options& o) {
  const auto val = ReadIdList(o.val_list), test = ReadIdList(o.test_list);
  Corpus c = ImportMultiWoz(ReadFile(o.in), val, test);
  for (const auto& issue : c.issues) std::cerr << "warning: quarantined " << issue.ToString() << "\n";
  SaveCorpus(c, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laug: augmentation and robustness evaluation for dialog LU corpora"};
  app.require_subcommand(1);
  Options o;

  auto* augment = app.add_subcommand("augment", "perturb every user turn with each method");
  AddRunFlags(augment, o);
  augment->add_option("--out", o.out, "output corpus")->required();
  augment->add_option("--split", o.split, "train, val, test or all");

  auto* compose = app.add_subcommand("compose", "train split plus an equal-proportion mix");
  AddRunFlags(compose, o);
  compose->add_option("--out", o.out, "output corpus")->required();
  compose->add_option("--ratio", o.cfg.ratio, "augmented records per original train turn");

  auto* stats = app.add_subcommand("stats", "change rates of augmented records");
  stats->add_option("--in", o.in, "original corpus")->required();
  stats->add_option("--aug", o.aug, "augmented corpus")->required();
  stats->add_option("--out", o.out, "JSON report (default: stdout)");
  stats->add_flag("--strict", o.strict, "fail on the first invalid dialog");

  auto* eval = app.add_subcommand("eval", "overall F1 of a predictions file");
  eval->add_option("--in", o.in, "corpus with gold labels")->required();
  eval->add_option("--predictions", o.predictions, "predictions JSON")->required();
  eval->add_option("--split", o.split, "train, val, test or all");
  eval->add_option("--context", o.cfg.context, "LU context window m");
  eval->add_option("--out", o.out, "JSON report (default: stdout)");
  eval->add_flag("--strict", o.strict, "fail on the first invalid dialog");

  auto* baseline = app.add_subcommand("baseline", "lexicon LU on original and augmented test sets");
  AddRunFlags(baseline, o);
  baseline->add_option("--out", o.out, "JSON report (default: stdout)");

  auto* import = app.add_subcommand("import-multiwoz", "convert a MultiWOZ data.json");
  import->add_option("--in", o.in, "MultiWOZ data.json")->required();
  import->add_option("--out", o.out, "output corpus")->required();
  import->add_option("--val-list", o.val_list, "file of validation dialog ids");
  import->add_option("--test-list", o.test_list, "file of test dialog ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*augment) return RunAugment(o);
    if (*compose) return RunCompose(o);
    if (*stats) return RunStats(o);
    if (*eval) return RunEval(o);
    if (*baseline) return RunBaselineCmd(o);
    if (*import) return RunImport(o);
  } catch (const ValidationError& e) {
    std::cerr << "laug: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "laug: parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const SpanBoundaryError& e) {
    std::cerr << "laug: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "laug: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const GeneratorUnavailableError& e) {
    std::cerr << "laug: paraphrase service unavailable: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "laug: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
