//
// Copyright 2026 The cswaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cswaug/ngramlm.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cswaug/error.h"

namespace cswaug::lm {
namespace {

constexpr std::uint32_t kUnkId = 0;
constexpr std::uint32_t kBosId = 1;
constexpr std::uint32_t kEosId = 2;
constexpr std::string_view kMagic = "# cswaug-ngram-model v1";

[[noreturn]] void BadModel(const std::string& what) {
  throw Error(ErrorCode::kParseError, "model file: " + what);
}

void Expect(std::istream& in, std::string_view keyword) {
  std::string word;
  if (!(in >> word) || word != keyword) {
    BadModel("expected '" + std::string(keyword) + "'");
  }
}

}  // namespace

std::size_t NgramModel::KeyHash::operator()(const Key& k) const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (std::uint32_t id : k) {
    h ^= id;
    h *= 0x100000001B3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::uint32_t NgramModel::IdOf(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnkId : it->second;
}

std::uint32_t NgramModel::Intern(const std::string& word) {
  auto [it, inserted] = ids_.emplace(word, static_cast<std::uint32_t>(words_.size()));
  if (inserted) words_.push_back(word);
  return it->second;
}

NgramModel NgramModel::Train(std::span<const Sentence> corpus,
                             const NgramOptions& options) {
  if (options.order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "order must be >= 1");
  }
  if (!(options.discount > 0.0 && options.discount < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "discount must be in (0, 1)");
  }
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "no training sentences");

  NgramModel m;
  m.options_ = options;
  m.options_.min_count = std::max<std::size_t>(1, options.min_count);
  m.Intern(std::string(kUnk));
  m.Intern(std::string(kBos));
  m.Intern(std::string(kEos));

  std::unordered_map<std::string, std::size_t> counts;
  std::vector<std::string> first_seen;
  for (const Sentence& s : corpus) {
    for (const std::string& w : s) {
      if (counts[w]++ == 0) first_seen.push_back(w);
      m.training_vocab_.insert(w);
    }
  }
  for (const std::string& w : first_seen) {
    if (counts[w] >= m.options_.min_count) m.Intern(w);
  }

  m.levels_.resize(m.options_.order);
  Key seq;
  for (const Sentence& s : corpus) {
    seq.assign(1, kBosId);
    for (const std::string& w : s) seq.push_back(m.IdOf(w));
    seq.push_back(kEosId);
    for (std::size_t j = 1; j < seq.size(); ++j) {
      for (std::size_t k = 1; k <= m.options_.order && k <= j + 1; ++k) {
        Key g(seq.begin() + static_cast<std::ptrdiff_t>(j + 1 - k),
              seq.begin() + static_cast<std::ptrdiff_t>(j + 1));
        ++m.levels_[k - 1].raw[std::move(g)];
      }
    }
  }
  m.Finalize();
  return m;
}

void NgramModel::Finalize() {
  const std::size_t n = levels_.size();
  for (std::size_t k = n; k >= 1; --k) {
    Level& level = levels_[k - 1];
    level.adjusted.clear();
    level.contexts.clear();
    if (k == n) {
      level.adjusted = level.raw;
    } else {
      for (const auto& [g, c] : level.raw) {
        if (g.front() == kBosId) level.adjusted[g] = c;
      }
      for (const auto& [longer, c] : levels_[k].raw) {
        Key suffix(longer.begin() + 1, longer.end());
        if (suffix.front() != kBosId) ++level.adjusted[suffix];
      }
    }
    for (const auto& [g, c] : level.adjusted) {
      ContextStats& stats = level.contexts[Key(g.begin(), g.end() - 1)];
      stats.total += static_cast<double>(c);
      ++stats.types;
    }
  }
}

double NgramModel::LevelProb(std::size_t level, const Key& context,
                             std::uint32_t word) const {
  const double d = options_.discount;
  const Level& lv = levels_[level - 1];
  double lower;
  if (level == 1) {
    lower = 1.0 / static_cast<double>(words_.size() - 1);  // all but <s>
  } else {
    lower = LevelProb(level - 1, Key(context.begin() + 1, context.end()), word);
  }
  auto ctx = lv.contexts.find(context);
  if (ctx == lv.contexts.end() || ctx->second.total <= 0.0) return lower;
  Key g = context;
  g.push_back(word);
  auto it = lv.adjusted.find(g);
  const double c = it == lv.adjusted.end() ? 0.0 : static_cast<double>(it->second);
  const ContextStats& s = ctx->second;
  return std::max(c - d, 0.0) / s.total +
         d * static_cast<double>(s.types) / s.total * lower;
}

double NgramModel::Prob(std::span<const std::string> context,
                        std::string_view word) const {
  const std::uint32_t w = IdOf(word);
  if (w == kBosId) return 0.0;
  const std::size_t len = std::min(context.size(), options_.order - 1);
  Key ctx;
  ctx.reserve(len);
  for (std::size_t i = context.size() - len; i < context.size(); ++i) {
    ctx.push_back(IdOf(context[i]));
  }
  return LevelProb(len + 1, ctx, w);
}

std::vector<std::string> NgramModel::OutcomeVocabulary() const {
  std::vector<std::string> out;
  for (std::uint32_t id = 0; id < words_.size(); ++id) {
    if (id != kBosId) out.push_back(words_[id]);
  }
  return out;
}

std::vector<Sentence> NgramModel::ObservedContexts() const {
  std::vector<Sentence> out;
  for (const Level& level : levels_) {
    for (const auto& [ctx, stats] : level.contexts) {
      Sentence s;
      for (std::uint32_t id : ctx) s.push_back(words_[id]);
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void NgramModel::Save(std::ostream& out) const {
  out << kMagic << '\n'
      << "order " << options_.order << '\n'
      << "discount " << std::setprecision(17) << options_.discount << '\n'
      << "min_count " << options_.min_count << '\n'
      << "vocab " << words_.size() - 3 << '\n';
  for (std::size_t id = 3; id < words_.size(); ++id) out << words_[id] << '\n';
  std::vector<std::string> train(training_vocab_.begin(), training_vocab_.end());
  std::sort(train.begin(), train.end());
  out << "training_vocab " << train.size() << '\n';
  for (const std::string& w : train) out << w << '\n';
  for (std::size_t k = 1; k <= levels_.size(); ++k) {
    std::vector<std::pair<Key, std::uint64_t>> rows(levels_[k - 1].raw.begin(),
                                                    levels_[k - 1].raw.end());
    std::sort(rows.begin(), rows.end());
    out << "level " << k << ' ' << rows.size() << '\n';
    for (const auto& [g, c] : rows) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        out << (i ? " " : "") << words_[g[i]];
      }
      out << '\t' << c << '\n';
    }
  }
  out << "end\n";
}

NgramModel NgramModel::Load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) BadModel("bad header");
  NgramModel m;
  Expect(in, "order");
  in >> m.options_.order;
  Expect(in, "discount");
  in >> m.options_.discount;
  Expect(in, "min_count");
  in >> m.options_.min_count;
  Expect(in, "vocab");
  std::size_t vocab = 0;
  in >> vocab;
  if (!in || m.options_.order < 1) BadModel("bad options");
  m.Intern(std::string(kUnk));
  m.Intern(std::string(kBos));
  m.Intern(std::string(kEos));
  for (std::size_t i = 0; i < vocab; ++i) {
    std::string w;
    if (!(in >> w)) BadModel("truncated vocabulary");
    m.Intern(w);
  }
  Expect(in, "training_vocab");
  std::size_t train = 0;
  in >> train;
  for (std::size_t i = 0; i < train; ++i) {
    std::string w;
    if (!(in >> w)) BadModel("truncated training vocabulary");
    m.training_vocab_.insert(std::move(w));
  }
  m.levels_.resize(m.options_.order);
  for (std::size_t k = 1; k <= m.options_.order; ++k) {
    Expect(in, "level");
    std::size_t level = 0;
    std::size_t rows = 0;
    in >> level >> rows;
    if (!in || level != k) BadModel("bad level header");
    std::getline(in, line);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!std::getline(in, line)) BadModel("truncated level");
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos) BadModel("bad n-gram row");
      std::istringstream words(line.substr(0, tab));
      Key g;
      std::string w;
      while (words >> w) {
        auto it = m.ids_.find(w);
        if (it == m.ids_.end()) BadModel("unknown word " + w);
        g.push_back(it->second);
      }
      if (g.size() != k) BadModel("n-gram of wrong order");
      m.levels_[k - 1].raw[std::move(g)] = std::stoull(line.substr(tab + 1));
    }
  }
  Expect(in, "end");
  m.Finalize();
  return m;
}

double Perplexity(const NgramModel& model, std::span<const Sentence> corpus) {
  double log_sum = 0.0;
  std::size_t scored = 0;
  Sentence history;
  for (const Sentence& s : corpus) {
    history.assign(1, std::string(kBos));
    for (std::size_t i = 0; i <= s.size(); ++i) {
      const std::string_view w = i < s.size() ? std::string_view(s[i]) : kEos;
      log_sum += std::log(model.Prob(history, w));
      ++scored;
      history.emplace_back(w);
    }
  }
  if (scored == 0) throw Error(ErrorCode::kInvalidArgument, "empty test corpus");
  return std::exp(-log_sum / static_cast<double>(scored));
}

std::unordered_set<std::string> BuildVocabulary(std::span<const Sentence> corpus) {
  std::unordered_set<std::string> vocab;
  for (const Sentence& s : corpus) vocab.insert(s.begin(), s.end());
  return vocab;
}

double OovRate(const std::unordered_set<std::string>& vocab,
               std::span<const Sentence> test) {
  std::size_t total = 0;
  std::size_t oov = 0;
  for (const Sentence& s : test) {
    for (const std::string& w : s) {
      ++total;
      oov += !vocab.contains(w);
    }
  }
  if (total == 0) throw Error(ErrorCode::kInvalidArgument, "empty test corpus");
  return 100.0 * static_cast<double>(oov) / static_cast<double>(total);
}

}  // namespace cswaug::lm
