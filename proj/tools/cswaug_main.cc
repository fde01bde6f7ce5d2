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

// cswaug: command-line front end for augmentation, scoring and the bundled
// correlation reproduction.

#include <cstdint>
#include <exception>
#include <filesystem>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cswaug/align.h"
#include "cswaug/corpus.h"
#include "cswaug/error.h"
#include "cswaug/eval.h"
#include "cswaug/extbridge.h"
#include "cswaug/lexaug.h"
#include "cswaug/ngramlm.h"
#include "cswaug/pipeline.h"
#include "cswaug/reproduce.h"
#include "cswaug/rng.h"
#include "cswaug/score_table.h"
#include "cswaug/theoryaug.h"
#include "json.hpp"
#include "run_record.h"

namespace cswaug::tools {
namespace {

namespace fs = std::filesystem;
using corpus::NormalizationPolicy;
using corpus::ParallelCorpus;
using corpus::SkipRecord;

using Runner = std::function<void(const RunRecord&)>;
using Registry = std::map<const CLI::App*, Runner>;

// ---- shared option blocks -------------------------------------------------

struct PolicyFlags {
  bool keep_diacritics = false;
  bool keep_punct = false;
  bool keep_case = false;
  bool keep_alif_ya = false;

  NormalizationPolicy Get() const {
    NormalizationPolicy p;
    p.strip_diacritics = !keep_diacritics;
    p.strip_punct = !keep_punct;
    p.lowercase_latin = !keep_case;
    p.alif_ya = !keep_alif_ya;
    return p;
  }
};

void AddPolicyFlags(CLI::App* cmd, PolicyFlags& f) {
  const char* group = "Normalization";
  cmd->add_flag("--keep-diacritics", f.keep_diacritics, "Keep Arabic diacritics")
      ->group(group);
  cmd->add_flag("--keep-punct", f.keep_punct, "Keep punctuation")->group(group);
  cmd->add_flag("--keep-case", f.keep_case, "Do not lowercase Latin letters")
      ->group(group);
  cmd->add_flag("--keep-alif-ya", f.keep_alif_ya, "Do not fold Alif and Ya variants")
      ->group(group);
}

struct CorpusInput {
  std::string src;
  std::string tgt;
  std::string tsv;
};

void AddCorpusOptions(CLI::App* cmd, CorpusInput& in) {
  const char* group = "Corpus";
  cmd->add_option("--src", in.src, "Matrix-language side, one sentence per line")
      ->group(group);
  cmd->add_option("--tgt", in.tgt, "Embedded-language side, line-aligned with --src")
      ->group(group);
  cmd->add_option("--tsv", in.tsv, "Parallel TSV: id<TAB>source<TAB>target")
      ->group(group);
}

ParallelCorpus LoadCorpus(const CorpusInput& in, const NormalizationPolicy& policy) {
  if (!in.tsv.empty()) {
    if (!in.src.empty() || !in.tgt.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "give either --tsv or --src/--tgt");
    }
    return corpus::LoadParallelTsv(in.tsv, policy);
  }
  if (in.src.empty() || in.tgt.empty()) {
    throw Error(ErrorCode::kMissingResource,
                "a parallel corpus is required: --src and --tgt, or --tsv");
  }
  return corpus::LoadParallel(in.src, in.tgt, policy);
}

// ---- output plumbing ------------------------------------------------------

// A file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error(ErrorCode::kIoError, "cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void Close() {
    if (!file_) {
      std::cout.flush();
      return;
    }
    file_->close();
    if (!*file_) throw Error(ErrorCode::kIoError, "write failed: " + path_);
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

// Files consumed by outside tools keep their record next to them, where a
// comment block cannot break line alignment or JSONL parsing.
void WriteSidecar(const std::string& path, const RunRecord& record) {
  Output out(path + ".provenance");
  record.WriteHeader(out.stream());
  out.Close();
}

void WriteSkipReportFile(const std::string& path, const RunRecord& record,
                         std::span<const SkipRecord> skips) {
  Output out(path);
  record.WriteHeader(out.stream());
  corpus::WriteSkipReport(skips, out.stream());
  out.Close();
}

struct MetricRow {
  std::string metric;
  double value;
  std::size_t n;
};

void WriteMetrics(const std::string& path, const RunRecord& record,
                  std::span<const MetricRow> rows) {
  Output out(path);
  record.WriteHeader(out.stream());
  out.stream() << "metric,value,n\n";
  for (const MetricRow& r : rows) {
    out.stream() << fmt::format("{},{:.6f},{}\n", r.metric, r.value, r.n);
  }
  out.Close();
}

CLI::Option* AddOutput(CLI::App* cmd, std::string& path, const char* help,
                       bool required = false) {
  CLI::Option* opt = cmd->add_option("-o,--output", path, help)->group(kOutputGroup);
  if (required) opt->required();
  return opt;
}

std::string Beside(const std::string& given, const std::string& output,
                   const char* suffix) {
  if (!given.empty()) return given;
  if (output.empty() || output == "-") return "";
  return output + suffix;
}

// ---- text inputs ----------------------------------------------------------

// One token list per line. Blank lines stay as empty lists so line-aligned
// files keep their alignment.
std::vector<std::vector<std::string>> ReadTokenLines(
    const fs::path& path, const NormalizationPolicy& policy) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& line : corpus::ReadLines(path)) {
    const std::string norm = corpus::Normalize(line, policy);
    out.push_back(norm.empty() ? std::vector<std::string>{}
                               : Surfaces(corpus::Tokenize(norm)));
  }
  return out;
}

std::vector<lm::Sentence> ReadSentences(const fs::path& path,
                                        const NormalizationPolicy& policy) {
  std::vector<lm::Sentence> out;
  for (auto& tokens : ReadTokenLines(path, policy)) {
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

struct TrainInputs {
  std::vector<std::string> text;
  std::vector<std::string> generations;
};

void AddTrainOptions(CLI::App* cmd, TrainInputs& in) {
  cmd->add_option("--train", in.text, "Training text, one sentence per line")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  cmd->add_option("--train-generations", in.generations,
                  "Generation files appended to the training text")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

std::vector<lm::Sentence> LoadTraining(const TrainInputs& in,
                                       const NormalizationPolicy& policy) {
  std::vector<lm::Sentence> out;
  for (const std::string& path : in.text) {
    for (auto& s : ReadSentences(path, policy)) out.push_back(std::move(s));
  }
  for (const std::string& path : in.generations) {
    for (const Generation& g : corpus::ReadGenerations(path)) {
      out.push_back(Surfaces(g.tokens));
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::kMissingResource,
                "no training sentences: give --train and/or --train-generations");
  }
  return out;
}

Strategy StrategyFromName(const std::string& name) {
  auto s = ParseStrategy(name);
  if (!s) throw Error(ErrorCode::kInvalidArgument, "unknown technique " + name);
  return *s;
}

std::string IssueReason(const bridge::LineIssue& issue, const char* what) {
  return fmt::format("{} line {}: {}", what, issue.line, issue.reason);
}

nlohmann::json TagsJson(const std::string& id, const lexaug::SwitchTags& tags) {
  nlohmann::json j;
  j["id"] = id;
  j["tags"] = nlohmann::json::array();
  for (std::uint8_t f : tags.flags) j["tags"].push_back(static_cast<int>(f));
  return j;
}

// ---- augment --------------------------------------------------------------

struct AugmentArgs {
  CorpusInput corpus;
  PolicyFlags policy;
  std::string strategy = "dict";
  std::string lexicon;
  std::string alignments;
  bool target_first = false;
  std::string tags;
  std::string function_words;
  double rate = 19.0;
  std::uint64_t seed = 0;
  std::size_t min_replacements = 1;
  double ref_spf = 0.22;
  std::size_t max_candidates = 64;
  std::size_t jobs = 1;
  std::string output;
  std::string skip_report;
};

void RunAugment(const AugmentArgs& a, const RunRecord& record) {
  const NormalizationPolicy policy = a.policy.Get();
  const ParallelCorpus corpus = LoadCorpus(a.corpus, policy);
  std::vector<SkipRecord> skips = corpus.skipped;

  pipeline::AugmentOptions options;
  options.strategy = StrategyFromName(a.strategy);
  options.augment.rate_percent = a.rate;
  options.augment.seed = a.seed;
  options.augment.min_replacements = a.min_replacements;
  options.theory.ref_spf = a.ref_spf;
  options.theory.max_candidates = a.max_candidates;
  options.jobs = a.jobs;

  pipeline::AugmentResources resources;
  lexaug::GlossLexicon lexicon;
  std::vector<align::AlignmentSet> alignments;
  std::unordered_map<std::string, lexaug::SwitchTags> tags;
  if (!a.lexicon.empty()) {
    lexicon = lexaug::GlossLexicon::Load(a.lexicon, policy);
    resources.lexicon = &lexicon;
  }
  if (!a.alignments.empty()) {
    // Alignment files follow input rows; the corpus may have dropped some.
    const auto by_row = align::LoadAlignments(a.alignments, corpus, a.target_first);
    alignments.reserve(corpus.pairs.size());
    for (std::size_t row : corpus.rows) alignments.push_back(by_row[row]);
    resources.alignments = &alignments;
  }
  if (!a.tags.empty()) {
    bridge::PredictionImport imported = bridge::ImportPredictions(a.tags, corpus.pairs);
    for (const auto& issue : imported.rejected) {
      skips.push_back({issue.id, IssueReason(issue, "tags")});
    }
    tags = std::move(imported.tags);
    resources.tags = &tags;
  }
  if (!a.function_words.empty()) {
    options.theory.function_words = theory::LoadFunctionWords(a.function_words, policy);
  }

  const pipeline::AugmentResult result = pipeline::Augment(corpus, resources, options);
  skips.insert(skips.end(), result.skipped.begin(), result.skipped.end());

  Output out(a.output);
  record.WriteHeader(out.stream());
  corpus::WriteGenerations(result.generations, out.stream());
  out.Close();
  const std::string report = Beside(a.skip_report, a.output, ".skips.tsv");
  if (!report.empty()) WriteSkipReportFile(report, record, skips);
  std::cerr << fmt::format("augment: {} generations from {} pairs, {} skipped\n",
                           result.generations.size(), corpus.pairs.size(),
                           skips.size());
}

void RegisterAugment(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<AugmentArgs>();
  CLI::App* cmd =
      app.add_subcommand("augment", "Generate synthetic code-switched sentences");
  AddCorpusOptions(cmd, a->corpus);
  AddPolicyFlags(cmd, a->policy);
  cmd->add_option("--strategy", a->strategy, "Augmentation technique")
      ->check(CLI::IsMember({"dict", "rand", "pred", "ec-rand", "ec-spf",
                             "ml-rand", "ml-spf"}));
  cmd->add_option("--lexicon", a->lexicon, "Gloss lexicon TSV (dict)");
  cmd->add_option("--align", a->alignments,
                  "Pharaoh alignments, one line per corpus row (all but dict)");
  cmd->add_flag("--align-target-first", a->target_first,
                "Alignment links are written target-source");
  cmd->add_option("--tags", a->tags, "Predicted switch tags JSONL (pred)");
  cmd->add_option("--function-words", a->function_words,
                  "Matrix-language function words, one per line (ml-*)");
  cmd->add_option("--rate", a->rate, "Percent of matrix tokens to replace")
      ->check(CLI::Range(0.0, 100.0));
  cmd->add_option("--seed", a->seed, "Base random seed");
  cmd->add_option("--min-replacements", a->min_replacements,
                  "Lower bound on replacements per sentence");
  cmd->add_option("--ref-spf", a->ref_spf, "Target switch-point fraction (*-spf)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--max-candidates", a->max_candidates,
                  "Cap on enumerated theory candidates per sentence")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-j,--jobs", a->jobs, "Worker threads")
      ->envname("CSWAUG_JOBS")
      ->check(CLI::PositiveNumber)
      ->group(kExecutionGroup);
  AddOutput(cmd, a->output, "Generation file: id<TAB>strategy<TAB>text", true);
  cmd->add_option("--skip-report", a->skip_report,
                  "Skip report [default: OUTPUT.skips.tsv]")
      ->group(kOutputGroup);
  registry[cmd] = [a](const RunRecord& r) { RunAugment(*a, r); };
}

// ---- tag ------------------------------------------------------------------

struct TagArgs {
  std::string rows;
  PolicyFlags policy;
  std::string output;
  std::string skip_report;
};

// Labels each translation token that reappears in the code-switched
// sentence; the result trains or stands in for a switch-point predictor.
void RunTag(const TagArgs& a, const RunRecord& record) {
  const NormalizationPolicy policy = a.policy.Get();
  std::vector<SkipRecord> skips;
  Output out(a.output);
  std::size_t written = 0;
  for (const bridge::CswRow& row : bridge::LoadCswRows(a.rows)) {
    if (row.translation.empty()) {
      skips.push_back({row.id, "MissingTranslation"});
      continue;
    }
    try {
      const auto csw = corpus::NormalizeAndTokenize(row.csw, policy);
      const auto translation = corpus::NormalizeAndTokenize(row.translation, policy);
      out.stream() << TagsJson(row.id, lexaug::MatchSwitchTags(csw, translation)).dump()
                   << '\n';
      ++written;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptySentence) throw;
      skips.push_back({row.id, e.what()});
    }
  }
  out.Close();
  if (!a.output.empty() && a.output != "-") WriteSidecar(a.output, record);
  const std::string report = Beside(a.skip_report, a.output, ".skips.tsv");
  if (!report.empty()) WriteSkipReportFile(report, record, skips);
  std::cerr << fmt::format("tag: {} rows tagged, {} skipped\n", written, skips.size());
}

void RegisterTag(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<TagArgs>();
  CLI::App* cmd = app.add_subcommand(
      "tag", "Derive switch tags from code-switched sentences and their translations");
  cmd->add_option("--rows", a->rows, "TSV: id<TAB>csw<TAB>translation")->required();
  AddPolicyFlags(cmd, a->policy);
  AddOutput(cmd, a->output, "Tags JSONL {\"id\", \"tags\"}");
  cmd->add_option("--skip-report", a->skip_report,
                  "Skip report [default: OUTPUT.skips.tsv]")
      ->group(kOutputGroup);
  registry[cmd] = [a](const RunRecord& r) { RunTag(*a, r); };
}

// ---- stats ----------------------------------------------------------------

struct StatsArgs {
  std::string text;
  std::string generations;
  PolicyFlags policy;
  std::string output;
};

void RunStats(const StatsArgs& a, const RunRecord& record) {
  std::vector<std::vector<Token>> sentences;
  if (!a.text.empty()) {
    const NormalizationPolicy policy = a.policy.Get();
    for (const std::string& line : corpus::ReadLines(a.text)) {
      const std::string norm = corpus::Normalize(line, policy);
      if (!norm.empty()) sentences.push_back(corpus::Tokenize(norm));
    }
  }
  if (!a.generations.empty()) {
    for (Generation& g : corpus::ReadGenerations(a.generations)) {
      sentences.push_back(std::move(g.tokens));
    }
  }
  if (a.text.empty() && a.generations.empty()) {
    throw Error(ErrorCode::kMissingResource, "give --text or --generations");
  }
  const eval::CswStats s = eval::ComputeCswStats(sentences);
  const std::vector<MetricRow> rows = {
      {"sentences", static_cast<double>(s.sentences), s.sentences},
      {"csw_sentences", static_cast<double>(s.csw_sentences), s.sentences},
      {"csw_fraction", s.csw_fraction, s.sentences},
      {"mean_spf", s.mean_spf, s.csw_sentences},
      {"embedded_fraction", s.embedded_fraction, s.sentences},
  };
  WriteMetrics(a.output, record, rows);
}

void RegisterStats(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<StatsArgs>();
  CLI::App* cmd = app.add_subcommand("stats", "Code-switching statistics of a corpus");
  cmd->add_option("--text", a->text, "Text file, one sentence per line");
  cmd->add_option("--generations", a->generations, "Generation file");
  AddPolicyFlags(cmd, a->policy);
  AddOutput(cmd, a->output, "Metrics CSV [default: stdout]");
  registry[cmd] = [a](const RunRecord& r) { RunStats(*a, r); };
}

// ---- ppl / oov ------------------------------------------------------------

struct PplArgs {
  TrainInputs train;
  std::string test;
  std::size_t order = 3;
  double discount = 0.75;
  std::size_t min_count = 1;
  PolicyFlags policy;
  std::string output;
  std::string save_model;
};

void RunPpl(const PplArgs& a, const RunRecord& record) {
  const NormalizationPolicy policy = a.policy.Get();
  const auto train = LoadTraining(a.train, policy);
  const auto test = ReadSentences(a.test, policy);
  lm::NgramOptions options;
  options.order = a.order;
  options.discount = a.discount;
  options.min_count = a.min_count;
  const lm::NgramModel model = lm::NgramModel::Train(train, options);
  std::size_t scored = 0;
  for (const auto& s : test) scored += s.size() + 1;
  const std::vector<MetricRow> rows = {{"ppl", lm::Perplexity(model, test), scored}};
  WriteMetrics(a.output, record, rows);
  if (!a.save_model.empty()) {
    Output out(a.save_model);
    model.Save(out.stream());
    out.Close();
    WriteSidecar(a.save_model, record);
  }
}

void RegisterPpl(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<PplArgs>();
  CLI::App* cmd = app.add_subcommand(
      "ppl", "Train a Kneser-Ney n-gram model and report test perplexity");
  AddTrainOptions(cmd, a->train);
  cmd->add_option("--test", a->test, "Test text, one sentence per line")->required();
  cmd->add_option("--order", a->order, "N-gram order")->check(CLI::Range(1, 9));
  cmd->add_option("--discount", a->discount, "Absolute discount")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--min-count", a->min_count, "Rarer training words become <unk>")
      ->check(CLI::PositiveNumber);
  AddPolicyFlags(cmd, a->policy);
  AddOutput(cmd, a->output, "Metrics CSV [default: stdout]");
  cmd->add_option("--save-model", a->save_model, "Write the trained model here")
      ->group(kOutputGroup);
  registry[cmd] = [a](const RunRecord& r) { RunPpl(*a, r); };
}

struct OovArgs {
  TrainInputs train;
  std::string test;
  PolicyFlags policy;
  std::string output;
};

void RunOov(const OovArgs& a, const RunRecord& record) {
  const NormalizationPolicy policy = a.policy.Get();
  const auto vocab = lm::BuildVocabulary(LoadTraining(a.train, policy));
  const auto test = ReadSentences(a.test, policy);
  std::size_t tokens = 0;
  for (const auto& s : test) tokens += s.size();
  const std::vector<MetricRow> rows = {{"oov", lm::OovRate(vocab, test), tokens}};
  WriteMetrics(a.output, record, rows);
}

void RegisterOov(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<OovArgs>();
  CLI::App* cmd = app.add_subcommand("oov", "Out-of-vocabulary rate of a test set");
  AddTrainOptions(cmd, a->train);
  cmd->add_option("--test", a->test, "Test text, one sentence per line")->required();
  AddPolicyFlags(cmd, a->policy);
  AddOutput(cmd, a->output, "Metrics CSV [default: stdout]");
  registry[cmd] = [a](const RunRecord& r) { RunOov(*a, r); };
}

// ---- wer / significance ---------------------------------------------------

struct WerArgs {
  std::string ref;
  std::string hyp;
  PolicyFlags policy;
  std::string output;
};

void RunWer(const WerArgs& a, const RunRecord& record) {
  const NormalizationPolicy policy = a.policy.Get();
  const eval::EvalReport report =
      eval::Score(ReadTokenLines(a.ref, policy), ReadTokenLines(a.hyp, policy));
  const std::vector<MetricRow> rows = {
      {"wer", report.wer, report.words.reference_length},
      {"cer", report.cer, report.chars.reference_length},
  };
  WriteMetrics(a.output, record, rows);
}

void RegisterWer(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<WerArgs>();
  CLI::App* cmd = app.add_subcommand("wer", "Word and character error rates");
  cmd->add_option("--ref", a->ref, "Reference text, one sentence per line")->required();
  cmd->add_option("--hyp", a->hyp, "Hypothesis text, line-aligned")->required();
  AddPolicyFlags(cmd, a->policy);
  AddOutput(cmd, a->output, "Metrics CSV [default: stdout]");
  registry[cmd] = [a](const RunRecord& r) { RunWer(*a, r); };
}

struct SignificanceArgs {
  std::string ref;
  std::string hyp_a;
  std::string hyp_b;
  std::string metric = "wer";
  std::size_t resamples = 10000;
  std::uint64_t seed = 0;
  PolicyFlags policy;
  std::string output;
};

void RunSignificance(const SignificanceArgs& a, const RunRecord& record) {
  const NormalizationPolicy policy = a.policy.Get();
  const auto refs = ReadTokenLines(a.ref, policy);
  const auto hyp_a = ReadTokenLines(a.hyp_a, policy);
  const auto hyp_b = ReadTokenLines(a.hyp_b, policy);
  const bool cer = a.metric == "cer";
  const eval::Metric metric = cer ? eval::Metric::kCer : eval::Metric::kWer;
  Rng rng(a.seed);
  const double p =
      eval::PairedSignificance(refs, hyp_a, hyp_b, metric, a.resamples, rng);
  const eval::EditStats sa = cer ? eval::Cer(refs, hyp_a) : eval::Wer(refs, hyp_a);
  const eval::EditStats sb = cer ? eval::Cer(refs, hyp_b) : eval::Wer(refs, hyp_b);
  const std::vector<MetricRow> rows = {
      {a.metric + "_a", sa.rate(), sa.reference_length},
      {a.metric + "_b", sb.rate(), sb.reference_length},
      {"p_value", p, refs.size()},
  };
  WriteMetrics(a.output, record, rows);
}

void RegisterSignificance(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<SignificanceArgs>();
  CLI::App* cmd = app.add_subcommand(
      "significance", "Paired approximate-randomization test between two systems");
  cmd->add_option("--ref", a->ref, "Reference text")->required();
  cmd->add_option("--hyp-a", a->hyp_a, "First system output")->required();
  cmd->add_option("--hyp-b", a->hyp_b, "Second system output")->required();
  cmd->add_option("--metric", a->metric, "wer or cer")
      ->check(CLI::IsMember({"wer", "cer"}));
  cmd->add_option("--resamples", a->resamples, "Random relabelings (>= 1000)")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{100000000}));
  cmd->add_option("--seed", a->seed, "Random seed");
  AddPolicyFlags(cmd, a->policy);
  AddOutput(cmd, a->output, "Metrics CSV [default: stdout]");
  registry[cmd] = [a](const RunRecord& r) { RunSignificance(*a, r); };
}

// ---- correlate / reproduce-paper ------------------------------------------

eval::ScoreTable TableFrom(const std::string& path) {
  return path.empty() ? reproduce::BundledScoreTable() : eval::ScoreTable::Load(path);
}

struct CorrelateArgs {
  std::string table;
  std::string x;
  std::string y;
  std::vector<std::string> subset;
  std::string output;
};

void RunCorrelate(const CorrelateArgs& a, const RunRecord& record) {
  const eval::ScoreTable table = TableFrom(a.table);
  std::vector<Strategy> subset;
  for (const std::string& name : a.subset) subset.push_back(StrategyFromName(name));
  const eval::CorrelationResult c = eval::Correlate(table, a.x, a.y, subset);
  const std::vector<MetricRow> rows = {{"r", c.r, c.n}, {"p", c.p, c.n}};
  WriteMetrics(a.output, record, rows);
}

void RegisterCorrelate(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<CorrelateArgs>();
  CLI::App* cmd = app.add_subcommand(
      "correlate", "Pearson correlation between two columns of a technique table");
  cmd->add_option("--table", a->table, "Score table CSV [default: bundled table]");
  cmd->add_option("--x", a->x, "First column")->required();
  cmd->add_option("--y", a->y, "Second column")->required();
  cmd->add_option("--subset", a->subset,
                  "Techniques to use [default: rows with both values]")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->delimiter(',');
  AddOutput(cmd, a->output, "Metrics CSV [default: stdout]");
  registry[cmd] = [a](const RunRecord& r) { RunCorrelate(*a, r); };
}

struct ReproduceArgs {
  std::string table;
  std::vector<std::string> drop;
  std::string output;
};

void RunReproduce(const ReproduceArgs& a, const RunRecord& record) {
  eval::ScoreTable table = TableFrom(a.table);
  for (const std::string& name : a.drop) table.RemoveTechnique(StrategyFromName(name));
  const auto rows = reproduce::Reproduce(table);
  Output out(a.output);
  record.WriteHeader(out.stream());
  reproduce::WriteReport(rows, out.stream());
  out.Close();
  std::size_t pass = 0;
  for (const auto& row : rows) pass += row.pass ? 1 : 0;
  std::cerr << fmt::format("reproduce-paper: {} of {} correlations within tolerance\n",
                           pass, rows.size());
}

void RegisterReproduce(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<ReproduceArgs>();
  CLI::App* cmd = app.add_subcommand(
      "reproduce-paper",
      "Recompute the published technique correlations from the bundled tables");
  cmd->add_option("--table", a->table, "Score table CSV [default: bundled table]");
  cmd->add_option("--drop", a->drop, "Techniques to remove before recomputing")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->delimiter(',');
  AddOutput(cmd, a->output, "Report CSV [default: stdout]");
  registry[cmd] = [a](const RunRecord& r) { RunReproduce(*a, r); };
}

// ---- constrain ------------------------------------------------------------

struct ConstrainArgs {
  std::vector<std::string> generations;
  std::size_t designated = 0;
  std::string output;
};

void RunConstrain(const ConstrainArgs& a, const RunRecord& record) {
  std::vector<corpus::GenerationSet> sets;
  for (const std::string& path : a.generations) {
    sets.push_back(corpus::ReadGenerations(path));
  }
  const corpus::GenerationSet kept = corpus::IntersectGenerations(sets, a.designated);
  Output out(a.output);
  record.WriteHeader(out.stream());
  corpus::WriteGenerations(kept, out.stream());
  out.Close();
  std::cerr << fmt::format("constrain: kept {} of {}\n", kept.size(),
                           sets.empty() ? 0 : sets[a.designated].size());
}

void RegisterConstrain(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<ConstrainArgs>();
  CLI::App* cmd = app.add_subcommand(
      "constrain", "Keep only sentences that every technique augmented");
  cmd->add_option("--generations", a->generations, "Generation files")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  cmd->add_option("--designated", a->designated,
                  "Index of the file whose generations are kept");
  AddOutput(cmd, a->output, "Generation file [default: stdout]");
  registry[cmd] = [a](const RunRecord& r) { RunConstrain(*a, r); };
}

// ---- bridges --------------------------------------------------------------

struct ExportPredArgs {
  CorpusInput corpus;
  PolicyFlags policy;
  std::string output;
};

void RunExportPred(const ExportPredArgs& a, const RunRecord& record) {
  const ParallelCorpus corpus = LoadCorpus(a.corpus, a.policy.Get());
  const std::size_t n = bridge::ExportPredictionRequests(corpus.pairs, a.output);
  WriteSidecar(a.output, record);
  std::cerr << fmt::format("export-pred: {} requests\n", n);
}

void RegisterExportPred(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<ExportPredArgs>();
  CLI::App* cmd = app.add_subcommand(
      "export-pred", "Write switch-point prediction requests as JSONL");
  AddCorpusOptions(cmd, a->corpus);
  AddPolicyFlags(cmd, a->policy);
  AddOutput(cmd, a->output, "Requests JSONL {\"id\", \"target_tokens\"}", true);
  registry[cmd] = [a](const RunRecord& r) { RunExportPred(*a, r); };
}

struct ImportPredArgs {
  CorpusInput corpus;
  PolicyFlags policy;
  std::string predictions;
  std::string output;
  std::string clean;
};

void RunImportPred(const ImportPredArgs& a, const RunRecord& record) {
  const ParallelCorpus corpus = LoadCorpus(a.corpus, a.policy.Get());
  const bridge::PredictionImport imported =
      bridge::ImportPredictions(a.predictions, corpus.pairs);
  std::vector<SkipRecord> report;
  for (const auto& issue : imported.rejected) {
    report.push_back({issue.id, IssueReason(issue, "rejected")});
  }
  for (const auto& issue : imported.warnings) {
    report.push_back({issue.id, IssueReason(issue, "warning")});
  }
  for (const std::string& id : imported.missing_ids) {
    report.push_back({id, "MissingPrediction"});
  }
  WriteSkipReportFile(a.output, record, report);
  if (!a.clean.empty()) {
    Output out(a.clean);
    for (const SentencePair& pair : corpus.pairs) {
      auto it = imported.tags.find(pair.id);
      if (it != imported.tags.end()) {
        out.stream() << TagsJson(pair.id, it->second).dump() << '\n';
      }
    }
    out.Close();
    WriteSidecar(a.clean, record);
  }
  std::cerr << fmt::format(
      "import-pred: {} accepted, {} rejected, {} warnings, {} missing\n",
      imported.tags.size(), imported.rejected.size(), imported.warnings.size(),
      imported.missing_ids.size());
}

void RegisterImportPred(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<ImportPredArgs>();
  CLI::App* cmd = app.add_subcommand(
      "import-pred", "Validate predicted switch tags against the corpus");
  AddCorpusOptions(cmd, a->corpus);
  AddPolicyFlags(cmd, a->policy);
  cmd->add_option("--predictions", a->predictions, "Predictions JSONL {\"id\", \"tags\"}")
      ->required();
  AddOutput(cmd, a->output, "Issue report TSV [default: stdout]");
  cmd->add_option("--clean", a->clean, "Write the accepted tags here, corpus order")
      ->group(kOutputGroup);
  registry[cmd] = [a](const RunRecord& r) { RunImportPred(*a, r); };
}

struct ExportBtArgs {
  std::string rows;
  std::string src_out;
  std::string tgt_out;
  std::string skip_report;
};

void RunExportBt(const ExportBtArgs& a, const RunRecord& record) {
  const std::vector<bridge::CswRow> rows = bridge::LoadCswRows(a.rows);
  std::vector<SkipRecord> skips;
  const std::size_t n = bridge::ExportBtTraining(rows, a.src_out, a.tgt_out, &skips);
  WriteSidecar(a.src_out, record);
  WriteSidecar(a.tgt_out, record);
  const std::string report = Beside(a.skip_report, a.tgt_out, ".skips.tsv");
  WriteSkipReportFile(report, record, skips);
  std::cerr << fmt::format("export-bt: {} of {} rows written\n", n, rows.size());
}

void RegisterExportBt(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<ExportBtArgs>();
  CLI::App* cmd = app.add_subcommand(
      "export-bt", "Write translation-to-CSW training files for a back-translation model");
  cmd->add_option("--rows", a->rows, "TSV: id<TAB>csw<TAB>translation")->required();
  cmd->add_option("--src-out", a->src_out, "Translations, one per line")
      ->required()
      ->group(kOutputGroup);
  cmd->add_option("--tgt-out", a->tgt_out, "Code-switched sentences, line-aligned")
      ->required()
      ->group(kOutputGroup);
  cmd->add_option("--skip-report", a->skip_report,
                  "Skip report [default: TGT_OUT.skips.tsv]")
      ->group(kOutputGroup);
  registry[cmd] = [a](const RunRecord& r) { RunExportBt(*a, r); };
}

struct ImportBtArgs {
  CorpusInput corpus;
  PolicyFlags policy;
  std::string outputs;
  std::string output;
  std::string skip_report;
};

void RunImportBt(const ImportBtArgs& a, const RunRecord& record) {
  const NormalizationPolicy policy = a.policy.Get();
  const ParallelCorpus corpus = LoadCorpus(a.corpus, policy);
  const bridge::BtImport imported = bridge::ImportBtOutputs(a.outputs, corpus.pairs, policy);
  std::vector<SkipRecord> report;
  for (const auto& issue : imported.rejected) {
    report.push_back({issue.id, IssueReason(issue, "rejected")});
  }
  for (const std::string& id : imported.monolingual_ids) {
    report.push_back({id, "MonolingualOutput: kept with spf 0"});
  }
  Output out(a.output);
  record.WriteHeader(out.stream());
  corpus::WriteGenerations(imported.generations, out.stream());
  out.Close();
  const std::string path = Beside(a.skip_report, a.output, ".skips.tsv");
  if (!path.empty()) WriteSkipReportFile(path, record, report);
  std::cerr << fmt::format("import-bt: {} generations, {} rejected, {} monolingual\n",
                           imported.generations.size(), imported.rejected.size(),
                           imported.monolingual_ids.size());
}

void RegisterImportBt(CLI::App& app, Registry& registry) {
  auto a = std::make_shared<ImportBtArgs>();
  CLI::App* cmd = app.add_subcommand(
      "import-bt", "Turn back-translation outputs into bt generations");
  AddCorpusOptions(cmd, a->corpus);
  AddPolicyFlags(cmd, a->policy);
  cmd->add_option("--outputs", a->outputs, "TSV: id<TAB>text")->required();
  AddOutput(cmd, a->output, "Generation file", true);
  cmd->add_option("--skip-report", a->skip_report,
                  "Issue report [default: OUTPUT.skips.tsv]")
      ->group(kOutputGroup);
  registry[cmd] = [a](const RunRecord& r) { RunImportBt(*a, r); };
}

// ---- entry ----------------------------------------------------------------

// Swaps "--replay-from FILE" for the arguments recorded in FILE. Arguments
// given alongside it come later and so override the recorded ones.
std::vector<std::string> ExpandReplay(std::vector<std::string> args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string path;
    std::size_t width = 0;
    if (args[i] == "--replay-from" && i + 1 < args.size()) {
      path = args[i + 1];
      width = 2;
    } else if (args[i].starts_with("--replay-from=")) {
      path = args[i].substr(14);
      width = 1;
    } else {
      continue;
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
               args.begin() + static_cast<std::ptrdiff_t>(i + width));
    std::vector<std::string> recorded = ReplayArguments(path);
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (!rest.empty() && rest.front() == recorded.front()) rest.erase(rest.begin());
    std::vector<std::string> out = {args.front()};
    out.insert(out.end(), recorded.begin(), recorded.end());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  return args;
}

int Main(int argc, char** argv) {
  CLI::App app{"Code-switched data augmentation and evaluation toolkit", "cswaug"};
  app.set_version_flag("--version", std::string(CSWAUG_VERSION));
  app.set_config("--config", "", "TOML file with a [subcommand] section; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--replay-from", "Rerun with the record at the top of an earlier output");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
      ->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();

  Registry registry;
  RegisterAugment(app, registry);
  RegisterTag(app, registry);
  RegisterStats(app, registry);
  RegisterPpl(app, registry);
  RegisterOov(app, registry);
  RegisterWer(app, registry);
  RegisterSignificance(app, registry);
  RegisterCorrelate(app, registry);
  RegisterConstrain(app, registry);
  RegisterExportPred(app, registry);
  RegisterImportPred(app, registry);
  RegisterExportBt(app, registry);
  RegisterImportBt(app, registry);
  RegisterReproduce(app, registry);

  try {
    std::vector<std::string> args = ExpandReplay({argv, argv + argc});
    std::vector<const char*> raw;
    for (const std::string& s : args) raw.push_back(s.c_str());
    app.parse(static_cast<int>(raw.size()), raw.data());
    const CLI::App* cmd = app.get_subcommands().front();
    registry.at(cmd)(RunRecord::FromApp(*cmd));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "cswaug: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cswaug: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace cswaug::tools

int main(int argc, char** argv) { return cswaug::tools::Main(argc, argv); }
