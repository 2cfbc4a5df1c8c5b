// tests/props.cc

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

#include "props.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "laug/aug_sd.h"
#include "laug/aug_sr.h"
#include "laug/aug_tp.h"
#include "laug/aug_wp.h"
#include "laug/error.h"
#include "laug/textkit.h"
#include "laug/utf8.h"

namespace laug::testing {

std::string DataPath(const std::string& name) { return std::string(LAUG_DATA_DIR) + "/" + name; }

const Corpus& Fixture() {
  static const Corpus c = LoadCorpus(DataPath("fixture_corpus.json"));
  return c;
}

const ResourceBundle& Resources() {
  static const ResourceBundle b = ResourceBundle::LoadDir(DefaultResourceDir());
  return b;
}

const std::vector<TurnRef>& FixtureUserTurns() {
  static const std::vector<TurnRef> turns = [] {
    std::vector<TurnRef> out;
    for (const auto& d : Fixture().dialogs) {
      if (d.quarantined) continue;
      for (std::size_t t = 0; t < d.turns.size(); ++t)
        if (d.turns[t].speaker == Speaker::kUser) out.push_back({&d, t});
    }
    return out;
  }();
  return turns;
}

Utterance MakeUtterance(const std::string& text, const std::vector<DialogActItem>& da) {
  Utterance u{Speaker::kUser, text, da, {}};
  const std::u32string t = utf8::Decode(text);
  std::size_t from = 0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (!da[i].HasValue()) continue;
    const std::u32string v = utf8::Decode(da[i].value);
    const std::size_t at = t.find(v, from);
    if (at == std::u32string::npos) throw std::invalid_argument("value not in text: " + da[i].value);
    u.spans.push_back({i, at, at + v.size()});
    from = at + v.size();
  }
  return u;
}

// --- oracles ---------------------------------------------------------------

std::size_t BruteForceLcs(const std::u32string& a, const std::u32string& b) {
  const std::u32string& s = a.size() <= b.size() ? a : b;
  const std::u32string& t = a.size() <= b.size() ? b : a;
  if (s.size() > 16) throw std::invalid_argument("BruteForceLcs: input too long");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
    if (bits <= best) continue;
    // Greedy embedding decides whether this subsequence of s is one of t.
    std::size_t j = 0;
    bool fits = true;
    for (std::size_t i = 0; i < s.size() && fits; ++i) {
      if (!(mask >> i & 1)) continue;
      while (j < t.size() && t[j] != s[i]) ++j;
      if (j == t.size()) fits = false;
      else ++j;
    }
    if (fits) best = bits;
  }
  return best;
}

namespace {

std::string Norm(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool SameItem(const DialogActItem& a, const DialogActItem& b) {
  return Norm(a.domain) == Norm(b.domain) && Norm(a.intent) == Norm(b.intent) &&
         Norm(a.slot) == Norm(b.slot) && Norm(a.value) == Norm(b.value);
}

std::vector<DialogActItem> Dedup(const DaSet& s) {
  std::vector<DialogActItem> out;
  for (const auto& x : s) {
    bool seen = false;
    for (const auto& y : out) seen = seen || SameItem(x, y);
    if (!seen) out.push_back(x);
  }
  return out;
}

}  // namespace

F1Counts BruteForceF1(const std::vector<DaSet>& pred, const std::vector<DaSet>& gold) {
  F1Counts r;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto p = Dedup(pred[i]), g = Dedup(gold[i]);
    for (const auto& x : p) {
      bool hit = false;
      for (const auto& y : g) hit = hit || SameItem(x, y);
      hit ? ++r.tp : ++r.fp;
    }
    for (const auto& y : g) {
      bool hit = false;
      for (const auto& x : p) hit = hit || SameItem(x, y);
      if (!hit) ++r.fn;
    }
  }
  if (r.tp + r.fp) r.precision = double(r.tp) / double(r.tp + r.fp);
  if (r.tp + r.fn) r.recall = double(r.tp) / double(r.tp + r.fn);
  r.f1 = r.precision + r.recall == 0 ? 0 : 2 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

// --- suites ----------------------------------------------------------------

std::string SuiteResult::Summary() const {
  std::ostringstream os;
  os << cases << " cases";
  if (skipped) os << ", " << skipped << " skipped";
  if (accepted) os << ", " << accepted << " accepted";
  os << ", " << failures.size() << " failures";
  if (!failures.empty()) os << " (first: " << failures.front() << ")";
  return os.str();
}

namespace {

constexpr std::size_t kMaxFailures = 20;

class Checker {
 public:
  Checker(SuiteResult& r, std::string where) : r_(r), where_(std::move(where)) {}
  void operator()(bool ok, const std::string& what) {
    if (!ok && r_.failures.size() < kMaxFailures) r_.failures.push_back(where_ + ": " + what);
  }

 private:
  SuiteResult& r_;
  std::string where_;
};

std::string Where(const TurnRef& t, std::size_t k) {
  return t.dialog->id + "#" + std::to_string(t.turn) + " case " + std::to_string(k);
}

// Span surfaces of the record equal those of the original, item by item.
void CheckSpansKept(Checker& check, const Utterance& u, const AugmentationRecord& rec) {
  check(rec.spans.size() == u.spans.size(), "span count changed");
  for (std::size_t k = 0; k < std::min(rec.spans.size(), u.spans.size()); ++k) {
    const auto& a = u.spans[k];
    const auto& b = rec.spans[k];
    check(a.item == b.item, "span item changed");
    check(utf8::Substr(u.text, a.start, a.end) == utf8::Substr(rec.text, b.start, b.end),
          "span text changed: '" + utf8::Substr(rec.text, b.start, b.end) + "'");
  }
}

std::size_t Words(const std::string& text, const std::vector<SpanAnnotation>& spans) {
  return WordCount(TokenizeWithSpans(text, spans));
}

std::vector<std::string> WordSurfaces(const std::string& text,
                                      const std::vector<SpanAnnotation>& spans) {
  std::vector<std::string> out;
  for (const auto& t : TokenizeWithSpans(text, spans))
    if (t.kind == TokenKind::kWord) out.push_back(t.surface);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SuiteResult EdaSuite(std::size_t cases, std::uint64_t seed) {
  SuiteResult r;
  const auto& turns = FixtureUserTurns();
  const auto& res = Resources();
  WpConfig cfg;
  cfg.stopwords = res.stopwords;
  std::mt19937_64 gen(seed);
  for (std::size_t k = 0; r.cases < cases && k < cases * 20; ++k) {
    const TurnRef& ref = turns[gen() % turns.size()];
    const Utterance& u = ref.dialog->turns[ref.turn];
    const auto op = static_cast<EdaOp>(gen() % 4);
    const TokenSeq toks = TokenizeWithSpans(u.text, u.spans);
    const std::size_t l = WordCount(toks);
    Rng rng(gen());
    EdaPlan plan;
    try {
      plan = SampleEdaPlan(toks, op, res.thesaurus, cfg, rng);
    } catch (const NoCandidateError&) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    Checker check(r, Where(ref, k) + " " + std::string(EdaOpName(op)));
    const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(0.1 * double(l) + 0.5)));
    switch (op) {
      case EdaOp::kSynonym: {
        std::set<std::size_t> eligible;
        for (std::size_t i = 0; i < toks.size(); ++i) {
          if (toks[i].kind != TokenKind::kWord) continue;
          const std::string w = utf8::ToLower(toks[i].surface);
          const auto* syn = res.thesaurus.Find(w);
          if (!res.stopwords.count(w) && syn && !syn->empty()) eligible.insert(i);
        }
        check(plan.replacements.size() == std::min(n, eligible.size()), "synonym count");
        for (const auto& [i, w] : plan.replacements) check(eligible.count(i) > 0, "ineligible token");
        break;
      }
      case EdaOp::kInsert:
        check(plan.insertions.size() == n, "insert count");
        break;
      case EdaOp::kSwap:
        check(plan.swaps.size() == n, "swap count");
        break;
      case EdaOp::kDelete:
        check(plan.deletions.size() == std::min(n, l - 1), "delete count");
        break;
    }
    AugmentationRecord rec;
    try {
      rec = ApplyEdaPlan(u, {ref.dialog->id, ref.turn}, plan);
    } catch (const std::exception& e) {
      check(false, std::string("apply threw: ") + e.what());
      continue;
    }
    check(rec.da == u.da, "DA changed");
    CheckSpansKept(check, u, rec);
    check(ValidateUtterance(rec.AsUtterance()).empty(), "record fails validation");
    check(RevertEdits(rec) == u.text, "revert mismatch");
    const std::size_t after = Words(rec.text, rec.spans);
    switch (op) {
      case EdaOp::kSynonym: check(after >= l, "synonym lost words"); break;
      case EdaOp::kInsert: check(after >= l + n, "insert word count"); break;
      case EdaOp::kSwap:
        check(WordSurfaces(rec.text, rec.spans) == WordSurfaces(u.text, u.spans),
              "swap changed the word multiset");
        break;
      case EdaOp::kDelete:
        check(after + plan.deletions.size() == l, "delete word count");
        break;
    }
  }
  return r;
}

SuiteResult SdSuite(std::size_t cases, std::uint64_t seed) {
  SuiteResult r;
  const auto& turns = FixtureUserTurns();
  const Ontology onto = SplitOntology(Fixture(), Split::kTrain);
  std::mt19937_64 gen(seed);
  for (std::size_t k = 0; r.cases < cases && k < cases * 20; ++k) {
    const TurnRef& ref = turns[gen() % turns.size()];
    const Utterance& u = ref.dialog->turns[ref.turn];
    DisfluencyDistributions dist = Resources().disfluency;
    // Cycle through single-type mixes and the shipped mix.
    if (k % 5 < 4) {
      dist.type_mix.assign(4, 0.0);
      dist.type_mix[k % 5] = 1.0;
    }
    Rng rng(gen());
    AugmentationRecord rec;
    try {
      rec = SdAugment(u, {ref.dialog->id, ref.turn}, onto, dist, rng);
    } catch (const NoCandidateError&) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    Checker check(r, Where(ref, k) + " " + (rec.notes.empty() ? "" : rec.notes[0]));
    check(rec.da == u.da, "DA changed");
    CheckSpansKept(check, u, rec);
    check(ValidateUtterance(rec.AsUtterance()).empty(), "record fails validation");
    check(rec.text != u.text, "nothing inserted");
    check(RevertEdits(rec) == u.text, "revert mismatch: '" + RevertEdits(rec) + "'");
    for (const auto& e : rec.edits) {
      check(e.removed.empty(), "edit removed text");
      for (const auto& sp : rec.spans)
        check(!(sp.start < e.new_start && e.new_start < sp.end), "insertion inside a span");
    }
  }
  return r;
}

namespace {

// Deterministic corruptions of a generated candidate.
std::string Corrupt(const std::string& cand, const Utterance& u, const Ontology& onto,
                    std::size_t kind, std::mt19937_64& gen) {
  std::vector<std::string> values;
  for (const auto& item : u.da)
    if (item.HasValue()) values.push_back(item.value);
  std::u32string c = utf8::Decode(cand);
  auto locate = [&](std::size_t& at, std::size_t& len) {
    if (values.empty()) return false;
    const std::u32string v = utf8::Decode(values[gen() % values.size()]);
    at = c.find(v);
    len = v.size();
    return at != std::u32string::npos;
  };
  std::size_t at = 0, len = 0;
  switch (kind) {
    case 1:  // typo inside a value
      if (locate(at, len)) {
        const std::size_t i = at + gen() % len;
        if (gen() % 2) c.insert(c.begin() + static_cast<long>(i), c[i]);
        else c[i] = U"xyz"[gen() % 3];
      }
      break;
    case 2:  // a value goes missing
      if (locate(at, len)) c.erase(at, len);
      break;
    case 3: {  // an unrelated ontology value shows up
      auto it = onto.begin();
      std::advance(it, static_cast<long>(gen() % onto.size()));
      if (!it->second.empty())
        c += U" near " + utf8::Decode(it->second[gen() % it->second.size()]);
      break;
    }
    case 4:
      c = utf8::ToLower(c);
      break;
    default:
      break;
  }
  return utf8::Encode(c);
}

}  // namespace

SuiteResult TpSuite(std::size_t cases, std::uint64_t seed) {
  SuiteResult r;
  const auto& turns = FixtureUserTurns();
  const Ontology& onto = Fixture().ontology;
  TemplateGenerator templates;
  TpConfig cfg;
  std::mt19937_64 gen(seed);
  for (std::size_t k = 0; r.cases < cases && k < cases * 20; ++k) {
    const TurnRef& ref = turns[gen() % turns.size()];
    const Utterance& u = ref.dialog->turns[ref.turn];
    if (u.da.empty()) {
      ++r.skipped;
      continue;
    }
    Rng rng(gen());
    ParaphraseRequest req{SerializeDa(u.da, FirstMentionDomains(*ref.dialog, ref.turn)), {}, 3};
    const auto cands = templates.Generate(req, rng);
    if (cands.empty()) {
      ++r.skipped;
      continue;
    }
    const std::string cand = Corrupt(cands[gen() % cands.size()], u, onto, k % 5, gen);
    ++r.cases;
    Checker check(r, Where(ref, k) + " '" + cand + "'");
    const auto rec = ValidateAndRepair(cand, u, {ref.dialog->id, ref.turn}, onto, cfg);
    if (!rec) continue;
    ++r.accepted;
    check(rec->da == u.da, "DA changed");
    check(ValidateUtterance(rec->AsUtterance()).empty(), "record fails validation");
    for (const auto& item : u.da) {
      if (!item.HasValue()) continue;
      const auto det = DetectValue(rec->text, item.value, 1.0);
      check(det && det->score == 1.0, "value '" + item.value + "' not found at 1.0");
    }
    for (const auto& sp : rec->spans)
      check(utf8::Substr(rec->text, sp.start, sp.end) == rec->da[sp.item].value,
            "span text differs from value");
  }
  return r;
}

SuiteResult SrSuite(std::size_t cases, std::uint64_t seed) {
  SuiteResult r;
  const auto& turns = FixtureUserTurns();
  const auto& res = Resources();
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> half(0.0, 0.5);
  for (std::size_t k = 0; r.cases < cases && k < cases * 20; ++k) {
    const TurnRef& ref = turns[gen() % turns.size()];
    const Utterance& u = ref.dialog->turns[ref.turn];
    SrConfig cfg;
    const bool quiet = k % 4 == 0;
    cfg.p_confuse = quiet ? 0.0 : half(gen);
    cfg.p_liaison = quiet ? 0.0 : half(gen);
    Rng rng(gen());
    const auto rec = SrAugment(u, {ref.dialog->id, ref.turn}, cfg, res.confusion, res.lexicon, rng);
    ++r.cases;
    Checker check(r, Where(ref, k) + " '" + rec.text + "'");
    check(ValidateUtterance(rec.AsUtterance()).empty(), "record fails validation");
    for (const auto& sp : rec.spans)
      check(utf8::Substr(rec.text, sp.start, sp.end) == rec.da[sp.item].value,
            "value '" + rec.da[sp.item].value + "' not verbatim at its span");
    std::size_t valued = 0, kept = 0;
    for (const auto& item : u.da) valued += item.HasValue();
    for (const auto& item : rec.da) kept += item.HasValue();
    r.accepted += kept;
    check(rec.da.size() + valued - kept == u.da.size(), "non-value items changed");
    std::set<std::size_t> spanned;
    for (const auto& sp : rec.spans) spanned.insert(sp.item);
    for (std::size_t i = 0; i < rec.da.size(); ++i)
      if (rec.da[i].HasValue()) check(spanned.count(i) > 0, "kept value has no span");
    if (quiet) check(kept == valued, "value lost with zero noise");
  }
  return r;
}

SuiteResult FuzzyRatioSuite(std::size_t max_len, std::uint64_t seed) {
  SuiteResult r;
  // All strings over {a,b,c} up to max_len, ordered by length then
  // lexicographically, so a longer string always has a larger index.
  std::vector<std::u32string> all{U""};
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].size() < max_len)
      for (char32_t c : {U'a', U'b', U'c'}) all.push_back(all[i] + c);
  auto index_of = [&](const std::u32string& s) {
    std::size_t base = 0, pw = 1, v = 0;
    for (std::size_t l = 0; l < s.size(); ++l, pw *= 3) base += pw;
    for (char32_t c : s) v = v * 3 + (c - U'a');
    return base + v;
  };
  std::vector<std::string> bytes;
  for (const auto& s : all) bytes.push_back(utf8::Encode(s));

  // Brute force: the distinct subsequences of every string, longest first,
  // and a membership bitset per string. LCS(a, b) is the length of the
  // first subsequence of a that is also one of b.
  const std::size_t words = (all.size() + 63) / 64;
  std::vector<std::vector<std::uint32_t>> subs(all.size());
  std::vector<std::uint64_t> member(all.size() * words, 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& s = all[i];
    std::set<std::uint32_t> ids;
    for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
      std::u32string t;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (mask >> k & 1) t += s[k];
      ids.insert(static_cast<std::uint32_t>(index_of(t)));
    }
    subs[i].assign(ids.rbegin(), ids.rend());
    for (auto id : ids) member[i * words + id / 64] |= std::uint64_t{1} << (id % 64);
  }
  auto oracle = [&](std::size_t i, std::size_t j) -> std::size_t {
    for (auto id : subs[i])
      if (member[j * words + id / 64] >> (id % 64) & 1) return all[id].size();
    return 0;
  };
  auto expect = [&](std::size_t i, std::size_t j) {
    const std::size_t n = all[i].size() + all[j].size();
    return n == 0 ? 1.0 : 2.0 * static_cast<double>(oracle(i, j)) / static_cast<double>(n);
  };

  // One representative per class: the first argument is not after the
  // second and starts with 'a'.
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i].empty() && all[i][0] != U'a') continue;
    for (std::size_t j = i; j < all.size(); ++j) {
      ++r.cases;
      const double got = FuzzyRatio(bytes[i], bytes[j]);
      if (got != expect(i, j) && r.failures.size() < kMaxFailures)
        r.failures.push_back("'" + bytes[i] + "' vs '" + bytes[j] + "': got " +
                             std::to_string(got) + ", oracle " + std::to_string(expect(i, j)));
    }
  }

  // The symmetries the classes rely on, on sampled pairs.
  std::mt19937_64 gen(seed);
  const std::u32string perms[] = {U"abc", U"acb", U"bac", U"bca", U"cab", U"cba"};
  for (int k = 0; k < 100000; ++k) {
    const std::size_t i = gen() % all.size(), j = gen() % all.size();
    const std::u32string& p = perms[gen() % 6];
    auto relabel = [&](const std::u32string& s) {
      std::u32string t = s;
      for (auto& c : t) c = p[c - U'a'];
      return utf8::Encode(t);
    };
    ++r.cases;
    const double want = expect(i, j);
    if ((FuzzyRatio(bytes[j], bytes[i]) != want || FuzzyRatio(relabel(all[i]), relabel(all[j])) != want) &&
        r.failures.size() < kMaxFailures)
      r.failures.push_back("symmetry broken for '" + bytes[i] + "', '" + bytes[j] + "'");
  }
  return r;
}

}  // namespace laug::testing
