// src/pipeline.cc

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

#include "laug/pipeline.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "laug/aug_sd.h"
#include "laug/error.h"
#include "laug/rng.h"

namespace laug {

using nlohmann::json;

namespace {

std::string Hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

// --- RunConfig -------------------------------------------------------------

void RunConfig::Validate() const {
  if (methods.empty()) throw ValidationError("methods: at least one method is required");
  if (!(ratio > 0) || !std::isfinite(ratio)) throw ValidationError("ratio must be positive");
  wp.Validate();
  tp.Validate();
  sr.Validate();
  if (!(tp_timeout > 0)) throw ValidationError("tp.timeout must be positive");
}

std::string RunConfig::ToJson() const {
  json j;
  j["seed"] = seed;
  json ms = json::array();
  for (Method m : methods) ms.push_back(std::string(MethodName(m)));
  j["methods"] = ms;
  j["ratio"] = ratio;
  j["wp"] = {{"alpha", wp.alpha}, {"p_svr", wp.p_svr}};
  j["tp"] = {{"detect_threshold", tp.detect_threshold},
             {"k", tp.k},
             {"context_turns", tp.context_turns},
             {"min_redundant_length", tp.min_redundant_length},
             {"endpoint", tp_endpoint},
             {"timeout", tp_timeout}};
  j["sr"] = {{"p_confuse", sr.p_confuse},
             {"p_liaison", sr.p_liaison},
             {"redetect_threshold", sr.redetect_threshold},
             {"strip_case_punct", sr.strip_case_punct}};
  j["resources"] = resources.string();
  j["sd_dist"] = sd_dist.string();
  j["context"] = context;
  return j.dump();
}

std::string RunConfig::Hash() const { return Hex(Fnv1a(ToJson())); }

// --- Augmenter -------------------------------------------------------------

namespace {

ResourceBundle LoadResources(const RunConfig& cfg) {
  const auto dir = cfg.resources.empty() ? DefaultResourceDir() : cfg.resources;
  ResourceBundle res = ResourceBundle::LoadDir(dir);
  if (!cfg.sd_dist.empty()) res.disfluency = DisfluencyDistributions::Load(cfg.sd_dist);
  return res;
}

std::shared_ptr<ParaphraseGenerator> MakeGenerator(const RunConfig& cfg) {
  if (cfg.tp_endpoint.empty()) return std::make_shared<TemplateGenerator>();
  return std::make_shared<HttpParaphraseClient>(cfg.tp_endpoint, cfg.tp_timeout);
}

}  // namespace

Augmenter::Augmenter(const Corpus& corpus, const RunConfig& cfg)
    : Augmenter(corpus, cfg, LoadResources(cfg), MakeGenerator(cfg)) {}

Augmenter::Augmenter(const Corpus& corpus, const RunConfig& cfg, ResourceBundle res,
                     std::shared_ptr<ParaphraseGenerator> gen)
    : corpus_(corpus), cfg_(cfg), res_(std::move(res)), gen_(std::move(gen)) {
  cfg_.Validate();
  if (cfg_.wp.stopwords.empty()) cfg_.wp.stopwords = res_.stopwords;
  train_ontology_ = SplitOntology(corpus_, Split::kTrain);
  pool_removed_ = res_.unseen_values.RestrictTo(train_ontology_);
}

std::optional<AugmentationRecord> Augmenter::Augment(Method m, const SourceRef& src,
                                                     std::uint64_t draw) const {
  const Dialog* d = corpus_.Find(src.dialog_id);
  if (!d || src.turn >= d->turns.size())
    throw ValidationError("unknown source " + src.dialog_id + " turn " + std::to_string(src.turn));
  const Utterance& u = d->turns[src.turn];
  Rng rng = Rng::Derive(cfg_.seed, MethodName(m), src.dialog_id + "#" + std::to_string(src.turn),
                        draw);
  std::optional<AugmentationRecord> rec;
  try {
    switch (m) {
      case Method::kWP:
        rec = WpAugment(u, src, cfg_.wp, res_.thesaurus, res_.unseen_values, rng);
        break;
      case Method::kTP:
        rec = TpAugment(*d, src.turn, *gen_, corpus_.ontology, cfg_.tp, rng);
        break;
      case Method::kSR:
        rec = SrAugment(u, src, cfg_.sr, res_.confusion, res_.lexicon, rng);
        break;
      case Method::kSD:
        rec = SdAugment(u, src, train_ontology_, res_.disfluency, rng);
        break;
    }
  } catch (const NoCandidateError&) {
    return std::nullopt;
  }
  if (rec) {
    auto problems = ValidateUtterance(rec->AsUtterance());
    if (!problems.empty())
      throw std::logic_error(std::string(MethodName(m)) + " produced an invalid record for " +
                             src.dialog_id + " turn " + std::to_string(src.turn) + ": " +
                             problems.front());
  }
  return rec;
}

std::vector<std::optional<AugmentationRecord>> Augmenter::AugmentAll(
    Method m, const std::vector<std::pair<SourceRef, std::uint64_t>>& jobs) const {
  std::vector<std::optional<AugmentationRecord>> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::size_t n_threads = cfg_.threads ? cfg_.threads : std::thread::hardware_concurrency();
  n_threads = std::max<std::size_t>(1, std::min(n_threads, jobs.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = Augment(m, jobs[i].first, jobs[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// --- Corpus-level runs -----------------------------------------------------

std::vector<SourceRef> UserTurns(const Corpus& c, Split split) {
  std::vector<SourceRef> out;
  for (const auto& d : c.dialogs) {
    if (d.split != split || d.quarantined || d.augment) continue;
    for (std::size_t t = 0; t < d.turns.size(); ++t)
      if (d.turns[t].speaker == Speaker::kUser) out.push_back({d.id, t});
  }
  return out;
}

std::vector<std::size_t> EvenSplit(std::size_t n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("EvenSplit over zero parts");
  std::vector<std::size_t> out(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++out[i];
  return out;
}

Dialog PackageRecord(const AugmentationRecord& rec, const Corpus& orig, Split split,
                     const std::string& id) {
  const Dialog* src = orig.Find(rec.source.dialog_id);
  if (!src) throw ValidationError("unknown source dialog " + rec.source.dialog_id);
  AugmentMeta meta;
  meta.method = std::string(MethodName(rec.method));
  meta.source_dialog = rec.source.dialog_id;
  meta.source_turn = rec.source.turn;
  for (std::size_t t = 0; t < rec.source.turn && t < src->turns.size(); ++t)
    meta.context.push_back({src->turns[t].speaker, src->turns[t].text});
  meta.notes = rec.notes;
  Dialog d;
  d.id = id;
  d.split = split;
  d.turns.push_back(rec.AsUtterance());
  d.augment = std::move(meta);
  return d;
}

std::vector<AugmentationRecord> RecordsFromCorpus(const Corpus& c) {
  std::vector<AugmentationRecord> out;
  for (const auto& d : c.dialogs) {
    if (!d.augment || d.turns.empty()) continue;
    auto m = ParseMethod(d.augment->method);
    if (!m) throw ValidationError(d.id + ": unknown method '" + d.augment->method + "'");
    AugmentationRecord rec;
    rec.method = *m;
    rec.source = {d.augment->source_dialog, d.augment->source_turn};
    rec.text = d.turns[0].text;
    rec.da = d.turns[0].da;
    rec.spans = d.turns[0].spans;
    rec.notes = d.augment->notes;
    out.push_back(std::move(rec));
  }
  return out;
}

Corpus AugmentSplit(const Corpus& c, Method m, Split split, const Augmenter& aug) {
  std::vector<std::pair<SourceRef, std::uint64_t>> jobs;
  for (auto& src : UserTurns(c, split)) jobs.emplace_back(std::move(src), 0);
  auto results = aug.AugmentAll(m, jobs);
  Corpus out;
  out.ontology = c.ontology;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    const auto& src = jobs[i].first;
    out.dialogs.push_back(PackageRecord(*results[i], c, split,
                                        Lower(MethodName(m)) + "-" + src.dialog_id + "-" +
                                            std::to_string(src.turn)));
  }
  Finalize(out);
  return out;
}

ComposeResult ComposeAugmentedSet(const Corpus& c, const RunConfig& cfg, const Augmenter& aug) {
  cfg.Validate();
  const auto turns = UserTurns(c, Split::kTrain);
  if (turns.empty()) throw ValidationError("compose: the training split has no user turns");

  ComposeResult res;
  res.target = static_cast<std::size_t>(std::llround(cfg.ratio * static_cast<double>(turns.size())));
  res.corpus.ontology = c.ontology;
  for (const auto& d : c.dialogs)
    if (d.split == Split::kTrain && !d.augment) res.corpus.dialogs.push_back(d);

  const auto counts = EvenSplit(res.target, cfg.methods.size());
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    const Method m = cfg.methods[mi];
    const std::size_t need = counts[mi];
    Rng order = Rng::Derive(cfg.seed, "compose", MethodName(m));
    std::vector<std::size_t> perm(turns.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[order.Uniform(i)]);

    // Sources come from one fixed stream: a permutation of every turn, then
    // draws with replacement. Failed turns are simply passed over.
    std::size_t produced = 0, pos = 0;
    const std::size_t max_pos = 50 * need + 10 * turns.size();
    while (produced < need) {
      if (pos >= max_pos)
        throw Error("compose: " + std::string(MethodName(m)) + " produced only " +
                    std::to_string(produced) + " of " + std::to_string(need) + " records");
      std::vector<std::pair<SourceRef, std::uint64_t>> jobs;
      for (std::size_t b = 0; b < need - produced; ++b, ++pos) {
        const std::size_t idx = pos < perm.size() ? perm[pos] : order.Uniform(turns.size());
        jobs.emplace_back(turns[idx], pos);
      }
      for (auto& r : aug.AugmentAll(m, jobs)) {
        if (!r) continue;
        char id[64];
        std::snprintf(id, sizeof(id), "aug-%s-%06zu", Lower(MethodName(m)).c_str(), produced);
        res.corpus.dialogs.push_back(PackageRecord(*r, c, Split::kTrain, id));
        ++produced;
      }
    }
    res.counts[m] = produced;
  }
  Finalize(res.corpus);
  return res;
}

namespace {

F1Report ScoreExamples(const LexiconLu& lu, const std::vector<LuExample>& examples) {
  std::vector<DaSet> pred, gold;
  for (const auto& ex : examples) {
    pred.push_back(lu.Predict(ex));
    gold.push_back(ex.gold);
  }
  return OverallF1(pred, gold);
}

}  // namespace

BaselineResult RunBaseline(const Corpus& c, const RunConfig& cfg, const Augmenter& aug) {
  const LexiconLu lu = LexiconLu::Train(c);
  BaselineResult res;
  auto orig = ExtractLuExamples(c, cfg.context, Split::kTest);
  std::erase_if(orig, [&](const LuExample& ex) {
    const Dialog* d = c.Find(ex.dialog_id);
    return !d || d->augment || d->quarantined;
  });
  res.original = ScoreExamples(lu, orig);
  for (Method m : cfg.methods) {
    const Corpus test = AugmentSplit(c, m, Split::kTest, aug);
    const auto examples = ExtractLuExamples(test, cfg.context);
    res.augmented[m] = ScoreExamples(lu, examples);
    res.examples[m] = examples.size();
  }
  return res;
}

// --- Reports ---------------------------------------------------------------

namespace {

json F1Object(const F1Report& r) {
  return {{"true_positives", r.true_positives}, {"false_positives", r.false_positives},
          {"false_negatives", r.false_negatives}, {"precision", r.precision},
          {"recall", r.recall},                   {"f1", r.f1}};
}

json ChangeRateObject(const ChangeRateReport& r) {
  return {{"char_rate", r.char_rate},       {"word_rate", r.word_rate},
          {"slot_rate", r.slot_rate},       {"records", r.records},
          {"value_fields", r.value_fields}, {"changed_fields", r.changed_fields}};
}

std::string Pct(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%7.2f", 100 * x);
  return buf;
}

}  // namespace

std::string F1Json(const F1Report& r) { return F1Object(r).dump(); }
std::string ChangeRateJson(const ChangeRateReport& r) { return ChangeRateObject(r).dump(); }

std::string ChangeRateTable(const std::map<std::string, ChangeRateReport>& rows) {
  std::ostringstream os;
  os << "Method     Char%   Word%   Slot%  Records\n";
  for (const auto& [name, r] : rows) {
    char head[16];
    std::snprintf(head, sizeof(head), "%-6s", name.c_str());
    os << head << " " << Pct(r.char_rate) << " " << Pct(r.word_rate) << " " << Pct(r.slot_rate)
       << "  " << r.records << "\n";
  }
  return os.str();
}

std::string F1Table(const std::map<std::string, F1Report>& rows) {
  std::ostringstream os;
  os << "Test     Prec%   Rec%    F1%     TP    FP    FN\n";
  for (const auto& [name, r] : rows) {
    char line[128];
    std::snprintf(line, sizeof(line), "%-6s %s %s %s %6zu%6zu%6zu\n", name.c_str(),
                  Pct(r.precision).c_str(), Pct(r.recall).c_str(), Pct(r.f1).c_str(),
                  r.true_positives, r.false_positives, r.false_negatives);
    os << line;
  }
  return os.str();
}

void WriteManifest(const std::filesystem::path& out, const std::string& command,
                   const RunConfig& cfg, const std::vector<std::filesystem::path>& inputs,
                   const std::map<std::string, std::string>& extra) {
  json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["seed"] = cfg.seed;
  j["config"] = json::parse(cfg.ToJson());
  j["config_hash"] = cfg.Hash();
  json in = json::array();
  for (const auto& p : inputs)
    in.push_back({{"path", p.string()}, {"fnv1a", Hex(Fnv1a(ReadFile(p)))}});
  j["inputs"] = in;
  for (const auto& [k, v] : extra) j[k] = v;
  WriteFileAtomic(out.string() + ".manifest.json", j.dump(1) + "\n");
}

}  // namespace laug
