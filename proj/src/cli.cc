//
// Copyright 2026 The lexsimp Authors
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

#include "lexsimp/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexsimp/corpus.h"
#include "lexsimp/pairenc.h"
#include "lexsimp/paraphrase.h"
#include "lexsimp/resources.h"
#include "lexsimp/simplify.h"
#include "lexsimp/sweep.h"
#include "lexsimp/synthetic.h"
#include "lexsimp/text.h"

namespace lexsimp {
namespace {

using Clock = std::chrono::steady_clock;

// Examples read and processed per streaming step.
constexpr std::size_t kStreamBlock = 4096;

// Bad flags, missing inputs and unreadable resources: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  ResourcePaths paths;
  Count nf = 1000;
  std::size_t ns = 10;
  std::string mode;
  std::string ls_mode = "lrls";
  bool require_gain = true;
  bool preserve_case = true;
  std::string method = "random_replace";
  std::size_t k = 1;
  double p = 0.1;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string format;
  std::string input;
  std::string out;
  std::size_t repeat = 3;
  std::string paraphrase_file;
  bool use_paraphraser = false;
  std::vector<Count> nf_grid = {0, 100, 1000, 10000};
  std::vector<std::size_t> ns_grid = {1, 2, 5, 10};
  bool synthetic = false;
  std::size_t synthetic_vocab = 50000;
  std::size_t synthetic_dim = 300;
  std::size_t synthetic_sentences = 5000;
};

double Millis(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void PrintSummary(std::ostream& err, std::size_t sentences, double replaced,
                  double lemma, double elapsed_ms) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "sentences=%zu replaced=%.4f lemma=%.4f elapsed_ms=%.1f",
                sentences, replaced, lemma, elapsed_ms);
  err << buf << '\n';
}

void RequirePath(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string("missing required ") + flag);
}

Resources LoadChecked(const ResourcePaths& paths) {
  for (const std::string* path : {&paths.frequency, &paths.embeddings, &paths.tag_lexicon,
                                  &paths.noun_exceptions, &paths.verb_exceptions}) {
    if (!path->empty() && !std::filesystem::is_regular_file(*path)) {
      throw UsageError("cannot open resource file '" + *path + "'");
    }
  }
  try {
    return LoadResources(paths);
  } catch (const std::exception& e) {
    throw UsageError(std::string("resource error: ") + e.what());
  }
}

SimplifyMode ParseModeFlag(const std::string& name) {
  try {
    return ParseSimplifyMode(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SimplifyConfig MakeSimplifyConfig(const Options& o, SimplifyMode mode) {
  SimplifyConfig cfg;
  cfg.n_f = o.nf;
  cfg.n_s = o.ns;
  cfg.mode = mode;
  cfg.require_gain = o.require_gain;
  cfg.preserve_case = o.preserve_case;
  return cfg;
}

ParaphraseConfig MakeParaphraseConfig(const Options& o) {
  ParaphraseConfig cfg;
  try {
    cfg.method = ParseParaphraseMethod(o.method);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.k = o.k;
  cfg.p = o.p;
  cfg.seed = o.seed;
  cfg.n_s = o.ns;
  return cfg;
}

DatasetFormat FormatOr(const Options& o, DatasetFormat fallback) {
  if (o.format.empty()) return fallback;
  try {
    return ParseDatasetFormat(o.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Opens --input (or falls back to `in`) before any resource is loaded.
class Input {
 public:
  Input(const std::string& path, std::istream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageError("cannot open input file '" + path + "'");
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageError("cannot write output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }
  void Finish() {
    stream_->flush();
    if (!*stream_) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// Reads up to kStreamBlock examples; false at end of input.
bool NextBlock(DatasetReader& reader, std::vector<LabeledExample>& block) {
  block.clear();
  while (block.size() < kStreamBlock) {
    std::optional<LabeledExample> ex = reader.Next();
    if (!ex) break;
    block.push_back(std::move(*ex));
  }
  return !block.empty();
}

std::vector<std::string> Texts(const std::vector<LabeledExample>& examples) {
  std::vector<std::string> texts;
  texts.reserve(examples.size());
  for (const LabeledExample& ex : examples) texts.push_back(ex.text);
  return texts;
}

int CmdSimplify(const Options& o, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const SimplifyMode mode = ParseModeFlag(o.mode.empty() ? "lrls" : o.mode);
  const DatasetFormat format = FormatOr(o, DatasetFormat::kPlain);
  RequirePath(o.paths.frequency, "--freq");
  if (mode == SimplifyMode::kLrls || mode == SimplifyMode::kRr) {
    RequirePath(o.paths.embeddings, "--emb");
  }
  Input input(o.input, in);
  Output output(o.out, out);
  const Resources res = LoadChecked(o.paths);
  const auto start = Clock::now();
  const Simplifier simplifier(res, MakeSimplifyConfig(o, mode));
  DatasetReader reader(input.get(), format);
  CorpusStats stats;
  std::vector<LabeledExample> block;
  while (NextBlock(reader, block)) {
    const std::vector<std::string> texts = Texts(block);
    for (const SimplifyResult& r : simplifier.SimplifyBatch(texts, o.threads)) {
      output.get() << r.text << '\n';
      stats.Add(r);
    }
  }
  output.Finish();
  PrintSummary(err, stats.sentences, stats.replaced_fraction(), stats.lemma_fraction(),
               Millis(start));
  return kExitOk;
}

int CmdParaphrase(const Options& o, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  const ParaphraseConfig cfg = MakeParaphraseConfig(o);
  const DatasetFormat format = FormatOr(o, DatasetFormat::kPlain);
  if (cfg.method == ParaphraseMethod::kRandomReplace) {
    RequirePath(o.paths.embeddings, "--emb");
  }
  Input input(o.input, in);
  Output output(o.out, out);
  const Resources res = LoadChecked(o.paths);
  const auto start = Clock::now();
  const Paraphraser paraphraser(res, cfg);
  DatasetReader reader(input.get(), format);
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::size_t changed = 0;
  std::vector<LabeledExample> block;
  std::vector<std::size_t> ids;
  while (NextBlock(reader, block)) {
    const std::vector<std::string> texts = Texts(block);
    ids.clear();
    for (const LabeledExample& ex : block) ids.push_back(ex.id);
    const std::vector<std::string> rewritten =
        paraphraser.ParaphraseBatch(texts, ids, o.threads);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      output.get() << rewritten[i] << '\n';
      // Replaced or deleted tokens, counted against the input length.
      const std::vector<Token> before = Tokenize(texts[i]);
      const std::vector<Token> after = Tokenize(rewritten[i]);
      tokens += before.size();
      if (cfg.method == ParaphraseMethod::kCutoff) {
        changed += before.size() - after.size();
      } else {
        for (std::size_t j = 0; j < before.size() && j < after.size(); ++j) {
          changed += before[j].surface != after[j].surface;
        }
      }
    }
    sentences += block.size();
  }
  output.Finish();
  PrintSummary(err, sentences,
               tokens ? static_cast<double>(changed) / static_cast<double>(tokens) : 0.0,
               0.0, Millis(start));
  return kExitOk;
}

int CmdEmit(const Options& o, std::istream& in, std::ostream& out,
            std::ostream& err) {
  EmitMode mode;
  try {
    mode = ParseEmitMode(o.mode.empty() ? "aux" : o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SimplifyMode ls_mode = ParseModeFlag(o.ls_mode);
  const DatasetFormat format = FormatOr(o, DatasetFormat::kTsv);
  const bool external = !o.paraphrase_file.empty();
  if (external && o.use_paraphraser) {
    throw UsageError("--paraphrase-file and --use-paraphraser are exclusive");
  }
  std::optional<ParaphraseConfig> pcfg;
  if (o.use_paraphraser) pcfg = MakeParaphraseConfig(o);
  const bool needs_resources = mode != EmitMode::kBaseline && !external;
  if (needs_resources && !pcfg) {
    RequirePath(o.paths.frequency, "--freq");
    if (ls_mode == SimplifyMode::kLrls || ls_mode == SimplifyMode::kRr) {
      RequirePath(o.paths.embeddings, "--emb");
    }
  }
  if (needs_resources && pcfg && pcfg->method == ParaphraseMethod::kRandomReplace) {
    RequirePath(o.paths.embeddings, "--emb");
  }
  Input input(o.input, in);
  std::vector<std::string> rewrites;
  if (external) {
    std::ifstream file(o.paraphrase_file, std::ios::binary);
    if (!file) throw UsageError("cannot open paraphrase file '" + o.paraphrase_file + "'");
    for (std::string line; std::getline(file, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      rewrites.push_back(std::move(line));
    }
  }
  Output output(o.out, out);
  const Resources res = needs_resources ? LoadChecked(o.paths) : Resources{};
  const auto start = Clock::now();
  const Dataset data = ReadDataset(input.get(), format, o.input.empty() ? "<stdin>" : o.input);
  if (data.empty()) throw std::runtime_error("empty dataset: " + data.source);

  EmissionReport report;
  if (pcfg && mode != EmitMode::kBaseline) {
    std::vector<std::size_t> ids;
    for (const LabeledExample& ex : data.examples) ids.push_back(ex.id);
    const Paraphraser paraphraser(res, *pcfg);
    rewrites = paraphraser.ParaphraseBatch(Texts(data.examples), ids, o.threads);
  }
  if (external || pcfg) {
    report = EmitDataset(data, rewrites, mode, output.get());
  } else {
    const Simplifier simplifier(res, MakeSimplifyConfig(o, ls_mode));
    report = EmitDataset(data, simplifier, mode, output.get(), o.threads);
  }
  output.Finish();
  PrintSummary(err, data.size(), report.stats.replaced_fraction(),
               report.stats.lemma_fraction(), Millis(start));
  err << "records=" << report.records << '\n';
  return kExitOk;
}

int CmdSweep(const Options& o, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const SimplifyMode ls_mode = ParseModeFlag(o.ls_mode);
  const DatasetFormat format = FormatOr(o, DatasetFormat::kTsv);
  RequirePath(o.paths.frequency, "--freq");
  RequirePath(o.paths.embeddings, "--emb");
  if (o.nf_grid.empty() || o.ns_grid.empty()) throw UsageError("sweep grids must be non-empty");
  if (std::find(o.ns_grid.begin(), o.ns_grid.end(), std::size_t{0}) != o.ns_grid.end()) {
    throw UsageError("--ns-grid values must be positive");
  }
  Input input(o.input, in);
  Output output(o.out, out);
  const Resources res = LoadChecked(o.paths);
  const auto start = Clock::now();
  const Dataset data = ReadDataset(input.get(), format, o.input.empty() ? "<stdin>" : o.input);
  if (data.empty()) throw std::runtime_error("empty dataset: " + data.source);
  const std::vector<SweepPoint> points =
      RunSweep(data, o.nf_grid, o.ns_grid, res, MakeSimplifyConfig(o, ls_mode), o.threads);
  WriteSweepCsv(points, output.get());
  output.Finish();
  err << "points=" << points.size() << " sentences=" << data.size()
      << " elapsed_ms=" << static_cast<long long>(Millis(start)) << '\n';
  return kExitOk;
}

int CmdBench(const Options& o, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const SimplifyMode mode = ParseModeFlag(o.mode.empty() ? "lrls" : o.mode);
  const DatasetFormat format = FormatOr(o, DatasetFormat::kPlain);
  Output output(o.out, out);
  std::unique_ptr<SyntheticWorld> world;
  std::unique_ptr<Resources> loaded;
  const Resources* res = nullptr;
  std::vector<std::string> sentences;
  if (o.synthetic) {
    SyntheticConfig scfg;
    scfg.vocab = o.synthetic_vocab;
    scfg.dim = o.synthetic_dim;
    scfg.seed = o.seed + 1;
    world = std::make_unique<SyntheticWorld>(MakeSyntheticWorld(scfg));
    res = &world->resources;
    if (o.input.empty()) {
      sentences = MakeSyntheticSentences(world->vocabulary, o.synthetic_sentences, 8, 24,
                                         o.seed + 2);
    }
  } else {
    RequirePath(o.paths.frequency, "--freq");
    RequirePath(o.paths.embeddings, "--emb");
  }
  if (sentences.empty()) {
    Input input(o.input, in);
    if (!o.synthetic) loaded = std::make_unique<Resources>(LoadChecked(o.paths));
    if (loaded) res = loaded.get();
    sentences = Texts(ReadDataset(input.get(), format).examples);
  }
  if (sentences.empty()) throw std::runtime_error("bench input is empty");

  const SimplifyConfig cfg = MakeSimplifyConfig(o, mode);
  StageTimes times;
  double wall = 0.0;
  std::size_t tokens = 0;
  for (std::size_t r = 0; r < o.repeat; ++r) {
    // Each repeat starts cold so that top-k work is measured every time.
    const Simplifier simplifier(*res, cfg);
    const auto start = Clock::now();
    const std::vector<SimplifyResult> results =
        simplifier.SimplifyBatch(sentences, o.threads, &times);
    wall += std::chrono::duration<double>(Clock::now() - start).count();
    for (const SimplifyResult& result : results) tokens += result.tokens.size();
  }
  const double processed = static_cast<double>(sentences.size() * o.repeat);
  const double total = times.total() > 0.0 ? times.total() : 1.0;
  char buf[256];
  std::ostream& dst = output.get();
  dst << "sentences=" << sentences.size() << " repeat=" << o.repeat
      << " threads=" << o.threads << " embeddings=" << res->embeddings.size()
      << 'x' << res->embeddings.dim() << '\n';
  std::snprintf(buf, sizeof(buf), "sentences_per_sec=%.1f\ntokens_per_sec=%.1f\n",
                processed / wall, static_cast<double>(tokens) / wall);
  dst << buf;
  std::snprintf(buf, sizeof(buf),
                "share_tag=%.4f share_lemma=%.4f share_lookup=%.4f share_topk=%.4f\n",
                times.tag / total, times.lemma / total, times.lookup / total,
                times.topk / total);
  dst << buf;
  output.Finish();
  err << "elapsed_ms=" << static_cast<long long>(wall * 1000.0) << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rule-based lexical simplification and pair emission", "lexsimp"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  app.add_option("--freq", o.paths.frequency, "Word frequency list (word count)");
  app.add_option("--emb", o.paths.embeddings, "Embedding table (word v1 ... vd)");
  app.add_option("--tags", o.paths.tag_lexicon, "Tag lexicon (word TAG)");
  app.add_option("--noun-exc", o.paths.noun_exceptions, "Noun exceptions (form lemma)");
  app.add_option("--verb-exc", o.paths.verb_exceptions, "Verb exceptions (form lemma)");
  app.add_option("--nf", o.nf, "Rarity threshold: frequency below this is rare");
  app.add_option("--ns", o.ns, "Synonym candidates per rare word")
      ->check(CLI::PositiveNumber);
  app.add_option("--mode", o.mode,
                 "simplify/bench: lrls|lemma|rr|none; emit: baseline|only|aug|aux");
  app.add_option("--ls-mode", o.ls_mode, "Simplification mode for emit and sweep");
  app.add_flag("--require-gain,!--no-require-gain", o.require_gain,
               "Replacement must be more frequent than the original");
  app.add_flag("--preserve-case,!--no-preserve-case", o.preserve_case,
               "Keep a leading capital on rewritten words");
  app.add_option("--method", o.method, "Paraphraser: random_replace|cutoff");
  app.add_option("--k", o.k, "Words to replace (random_replace)");
  app.add_option("--p", o.p, "Deletion probability (cutoff)")->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", o.seed, "RNG seed");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Input format: tsv|jsonl|plain");
  app.add_option("--input", o.input, "Input file (default: standard input)");
  app.add_option("--out", o.out, "Output file (default: standard output)");
  app.add_option("--repeat", o.repeat, "Bench repetitions")->check(CLI::PositiveNumber);
  app.add_option("--paraphrase-file", o.paraphrase_file,
                 "emit: line-aligned external rewrites instead of simplification");
  app.add_flag("--use-paraphraser", o.use_paraphraser,
               "emit: rewrite with the paraphraser instead of simplification");
  app.add_option("--nf-grid", o.nf_grid, "sweep: n_f values")->delimiter(',');
  app.add_option("--ns-grid", o.ns_grid, "sweep: n_s values")->delimiter(',');
  app.add_flag("--synthetic", o.synthetic, "bench: generate resources in memory");
  app.add_option("--synthetic-vocab", o.synthetic_vocab, "bench: synthetic vocabulary")
      ->check(CLI::PositiveNumber);
  app.add_option("--synthetic-dim", o.synthetic_dim, "bench: synthetic dimension")
      ->check(CLI::PositiveNumber);
  app.add_option("--synthetic-sentences", o.synthetic_sentences,
                 "bench: synthetic sentences when no --input is given")
      ->check(CLI::PositiveNumber);

  CLI::App* simplify = app.add_subcommand("simplify", "Simplify sentences line by line");
  CLI::App* paraphrase = app.add_subcommand("paraphrase", "Random replacement or cutoff");
  CLI::App* emit = app.add_subcommand("emit", "Write classifier records");
  CLI::App* sweep = app.add_subcommand("sweep", "Corpus statistics over an n_f x n_s grid");
  CLI::App* bench = app.add_subcommand("bench", "Measure simplification throughput");
  for (CLI::App* sub : {simplify, paraphrase, emit, sweep, bench}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (simplify->parsed()) return CmdSimplify(o, in, out, err);
    if (paraphrase->parsed()) return CmdParaphrase(o, in, out, err);
    if (emit->parsed()) return CmdEmit(o, in, out, err);
    if (sweep->parsed()) return CmdSweep(o, in, out, err);
    return CmdBench(o, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitProcessing;
  }
}

}  // namespace lexsimp
