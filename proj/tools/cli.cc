// Copyright 2026 The Emboot Authors.
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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "emboot/baselines.h"
#include "emboot/bootstrap.h"
#include "emboot/errors.h"
#include "emboot/evaluation.h"
#include "emboot/io.h"
#include "emboot/synth.h"

namespace emboot {
namespace {

namespace fs = std::filesystem;

std::ifstream OpenIn(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return in;
}

std::ofstream OpenOut(const fs::path &path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

struct CorpusArgs {
  std::string corpus;
  std::string format = "auto";
  int window = 4;
  int64_t min_entity_freq = 1;
  int64_t min_pattern_freq = 1;

  void Register(CLI::App *app) {
    app->add_option("--corpus", corpus, "CoNLL corpus (4- or 2-column)")
        ->required();
    app->add_option("--format", format, "auto, conll2003 or two-column")
        ->check(CLI::IsMember({"auto", "conll2003", "two-column"}));
    app->add_option("--window", window, "pattern window in tokens");
    app->add_option("--min-entity-freq", min_entity_freq,
                    "drop entities with fewer mentions");
    app->add_option("--min-pattern-freq", min_pattern_freq,
                    "drop patterns with fewer matches");
  }

  Corpus Load() const {
    ConllFormat f = ConllFormat::kAuto;
    if (format == "conll2003") f = ConllFormat::kConll2003;
    if (format == "two-column") f = ConllFormat::kTwoColumn;
    std::ifstream in = OpenIn(corpus);
    return ParseConll(in, f);
  }

  CorpusIndex Index(const Corpus &c) const {
    IndexOptions options;
    options.window = window;
    options.min_entity_frequency = min_entity_freq;
    options.min_pattern_frequency = min_pattern_freq;
    return BuildCorpusIndex(c.WithoutLabels(), options);
  }
};

struct RunArgs {
  CorpusArgs corpus;
  BootstrapConfig config;
  std::string seeds;
  std::string pretrained;
  std::string out;

  void Register(CLI::App *app) {
    corpus.Register(app);
    app->add_option("--seeds", seeds, "JSON object: category -> seed list")
        ->required();
    app->add_option("--pretrained", pretrained, "pretrained word vectors");
    app->add_option("--out", out, "run directory")->required();
    app->add_option("--epochs", config.epochs, "bootstrapping epochs");
    app->add_option("--inner-epochs", config.train.inner_epochs,
                    "embedding sweeps per epoch");
    app->add_option("--dim", config.dim, "embedding dimension");
    app->add_option("--promote-entities", config.entities_per_epoch,
                    "entities promoted per category per epoch");
    app->add_option("--promote-patterns", config.patterns_per_epoch,
                    "patterns promoted per category per epoch");
    app->add_option("--neg-samples", config.train.negative_samples,
                    "negative patterns per positive occurrence");
    app->add_option("--rng-seed", config.rng_seed, "seed for all randomness");
  }

  std::optional<WordVectors> LoadPretrained() const {
    if (pretrained.empty()) return std::nullopt;
    std::ifstream in = OpenIn(pretrained);
    return WordVectors::Load(in);
  }

  PoolState LoadSeeds(const CorpusIndex &index) const {
    std::ifstream in = OpenIn(seeds);
    return InitPools(ReadSeeds(in), index.entities);
  }
};

void WriteRun(const fs::path &dir, const Trace &trace, const Corpus &corpus,
              const CorpusIndex &index) {
  fs::create_directories(dir);
  std::ofstream trace_out = OpenOut(dir / "trace.jsonl");
  WriteTrace(trace, index.entities, index.patterns, trace_out);
  std::ofstream metrics_out = OpenOut(dir / "metrics.csv");
  WriteMetrics(trace.system,
               PrecisionThroughput(trace, index.entities, GoldLabels(corpus)),
               metrics_out);
}

int Train(const RunArgs &args) {
  const Corpus corpus = args.corpus.Load();
  BootstrapConfig config = args.config;
  config.window = args.corpus.window;
  const CorpusIndex index = args.corpus.Index(corpus);
  const auto pretrained = args.LoadPretrained();
  const BootstrapResult result =
      RunBootstrap(config, index, args.LoadSeeds(index),
                   pretrained ? &*pretrained : nullptr);
  const fs::path dir(args.out);
  WriteRun(dir, result.trace, corpus, index);
  std::ofstream emb_out = OpenOut(dir / "embeddings.tsv");
  WriteEmbeddings(result.embeddings, index.entities, index.patterns, emb_out);
  std::ofstream dl_out = OpenOut(dir / "decision_list.tsv");
  WriteDecisionList(BuildDecisionList(result.trace.snapshots.back(),
                                      result.embeddings, config.epochs),
                    index.patterns, dl_out);
  return 0;
}

int Baseline(const RunArgs &args, const std::string &system,
             const LabelPropagationConfig &lp) {
  const Corpus corpus = args.corpus.Load();
  BootstrapConfig config = args.config;
  config.window = args.corpus.window;
  const CorpusIndex index = args.corpus.Index(corpus);
  const PoolState seeds = args.LoadSeeds(index);
  const fs::path dir(args.out);
  if (system == "lp") {
    WriteRun(dir, RunLpBootstrap(config, index, seeds, lp), corpus, index);
    return 0;
  }
  const auto pretrained = args.LoadPretrained();
  const BootstrapResult result =
      RunEpb(config, index, seeds, pretrained ? &*pretrained : nullptr);
  WriteRun(dir, result.trace, corpus, index);
  if (pretrained) {
    std::ofstream dl_out = OpenOut(dir / "decision_list.tsv");
    WriteDecisionList(BuildEpbDecisionList(result.trace, index, *pretrained),
                      index.patterns, dl_out);
  }
  return 0;
}

struct RunDirArgs {
  CorpusArgs corpus;
  std::string run;
  std::string pretrained;
  std::string out;
  std::optional<int> epoch;
};

int ExportInterp(const RunDirArgs &args) {
  const Corpus corpus = args.corpus.Load();
  const CorpusIndex index = args.corpus.Index(corpus);
  const fs::path dir(args.run);
  std::ifstream trace_in = OpenIn((dir / "trace.jsonl").string());
  const Trace trace = ReadTrace(trace_in, index.entities, index.patterns);
  const int last = static_cast<int>(trace.snapshots.size()) - 1;
  const int epoch = args.epoch.value_or(last);
  if (epoch < 0 || epoch > last) {
    throw ConfigError("epoch " + std::to_string(epoch) + " is not in the trace");
  }
  const PoolState &pools = trace.snapshots[static_cast<size_t>(epoch)];
  DecisionList dl;
  if (!args.pretrained.empty()) {
    std::ifstream in = OpenIn(args.pretrained);
    const WordVectors vectors = WordVectors::Load(in);
    dl = BuildPretrainedDecisionList(pools, index.entities, index.patterns,
                                     vectors, epoch);
  } else {
    std::ifstream emb_in = OpenIn((dir / "embeddings.tsv").string());
    dl = BuildDecisionList(
        pools, ReadEmbeddings(emb_in, index.entities, index.patterns), epoch);
  }
  const fs::path out =
      args.out.empty() ? dir / "decision_list.tsv" : fs::path(args.out);
  std::ofstream dl_out = OpenOut(out);
  WriteDecisionList(dl, index.patterns, dl_out);
  return 0;
}

int ClassifyEntities(const CorpusArgs &corpus_args, const std::string &dl_path,
                     const std::string &out_path) {
  const Corpus corpus = corpus_args.Load();
  const CorpusIndex index = corpus_args.Index(corpus);
  std::ifstream dl_in = OpenIn(dl_path);
  const DecisionList dl = ReadDecisionList(dl_in, index.patterns);

  std::ofstream file;
  if (!out_path.empty()) file = OpenOut(out_path);
  std::ostream &out = out_path.empty() ? std::cout : file;
  out << "entity\tprediction";
  for (const std::string &c : dl.categories()) out << '\t' << c;
  out << "\tpatterns\n";
  char buf[32];
  for (size_t e = 0; e < index.entities.size(); ++e) {
    const auto id = static_cast<int32_t>(e);
    const Classification result = Classify(id, dl, index.cooc);
    out << index.entities.key(id) << '\t'
        << (result.abstained() ? std::string("ABSTAIN")
                               : dl.categories()[*result.category]);
    for (double s : result.scores) {
      std::snprintf(buf, sizeof(buf), "%.6f", s);
      out << '\t' << buf;
    }
    out << '\t' << result.contributing_patterns << '\n';
  }
  return 0;
}

int Eval(const RunDirArgs &args) {
  const Corpus corpus = args.corpus.Load();
  const CorpusIndex index = args.corpus.Index(corpus);
  const GoldMap gold = GoldLabels(corpus);
  const fs::path dir(args.run);
  std::ifstream trace_in = OpenIn((dir / "trace.jsonl").string());
  const Trace trace = ReadTrace(trace_in, index.entities, index.patterns);

  std::ofstream file;
  if (!args.out.empty()) file = OpenOut(args.out);
  std::ostream &out = args.out.empty() ? std::cout : file;
  WriteMetrics(trace.system, PrecisionThroughput(trace, index.entities, gold),
               out);

  const fs::path dl_path = dir / "decision_list.tsv";
  if (!fs::exists(dl_path)) return 0;
  std::ifstream dl_in = OpenIn(dl_path.string());
  const DecisionList dl = ReadDecisionList(dl_in, index.patterns);
  std::vector<int32_t> promoted;
  for (const auto &[entity, category] : PromotedEntities(trace)) {
    promoted.push_back(entity);
  }
  const DecisionListEvaluation eval =
      EvaluateDecisionList(dl, promoted, index.entities, gold, index.cooc);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "\ndecision list on %zu promoted entities\n"
                "accuracy\t%.6f\nabstain_rate\t%.6f\n"
                "at_most_2_patterns\t%.6f\nat_most_5_patterns\t%.6f\n",
                eval.total, eval.accuracy, eval.abstain_rate,
                eval.FractionAtMost(2), eval.FractionAtMost(5));
  out << buf << "patterns\tpredictions\n";
  for (const auto &[count, n] : eval.histogram) {
    out << count << '\t' << n << '\n';
  }
  return 0;
}

int Synth(const std::string &spec_path, std::optional<uint64_t> seed,
          const std::string &out_path) {
  SynthSpec spec;
  if (!spec_path.empty()) {
    std::ifstream in = OpenIn(spec_path);
    spec = ReadSynthSpec(in);
  }
  if (seed) spec.rng_seed = *seed;
  const SynthCorpus synth = GenerateSynthCorpus(spec);
  const fs::path out(out_path);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  const fs::path dir = out.has_parent_path() ? out.parent_path() : ".";
  std::ofstream corpus_out = OpenOut(out);
  WriteConll(synth.corpus, corpus_out);
  std::ofstream seeds_out = OpenOut(dir / "seeds.json");
  WriteSeeds(synth.seeds, seeds_out);
  std::ofstream vectors_out = OpenOut(dir / "pretrained.tsv");
  WriteWordVectors(synth.pretrained, vectors_out);
  std::ofstream truth_out = OpenOut(dir / "truth.tsv");
  WritePatternTruth(synth.pattern_truth, truth_out);
  return 0;
}

}  // namespace

int CliMain(int argc, char **argv) {
  CLI::App app{"Bootstrapped entity classification with custom embeddings"};
  app.require_subcommand(1);

  RunArgs train_args;
  CLI::App *train = app.add_subcommand("train", "run Emboot");
  train_args.Register(train);

  RunArgs baseline_args;
  std::string system;
  LabelPropagationConfig lp;
  double gamma = 0.0;
  CLI::App *baseline = app.add_subcommand("baseline", "run EPB or LP");
  baseline_args.Register(baseline);
  baseline->add_option("--system", system, "epb or lp")
      ->required()
      ->check(CLI::IsMember({"epb", "lp"}));
  CLI::Option *gamma_opt =
      baseline->add_option("--gamma", gamma, "LP kernel width");
  baseline->add_option("--max-iter", lp.max_iterations, "LP iterations");

  RunDirArgs export_args;
  int export_epoch = 0;
  CLI::App *export_interp =
      app.add_subcommand("export-interp", "rebuild a run's decision list");
  export_args.corpus.Register(export_interp);
  export_interp->add_option("--run", export_args.run, "run directory")
      ->required();
  export_interp->add_option("--pretrained", export_args.pretrained,
                            "use pretrained word averages instead of the "
                            "run's embeddings");
  CLI::Option *epoch_opt =
      export_interp->add_option("--epoch", export_epoch, "trace epoch");
  export_interp->add_option("--out", export_args.out,
                            "output (default: <run>/decision_list.tsv)");

  CorpusArgs classify_corpus;
  std::string classify_dl, classify_out;
  CLI::App *classify =
      app.add_subcommand("classify", "label entities with a decision list");
  classify_corpus.Register(classify);
  classify->add_option("--decision-list", classify_dl, "decision list TSV")
      ->required();
  classify->add_option("--out", classify_out, "output TSV (default: stdout)");

  RunDirArgs eval_args;
  CLI::App *eval = app.add_subcommand("eval", "score a run against gold");
  eval_args.corpus.Register(eval);
  eval->add_option("--run", eval_args.run, "run directory")->required();
  eval->add_option("--out", eval_args.out, "report (default: stdout)");

  std::string synth_spec, synth_out;
  uint64_t synth_seed = 0;
  CLI::App *synth = app.add_subcommand(
      "synth", "write a synthetic corpus plus seeds.json, pretrained.tsv "
               "and truth.tsv beside it");
  synth->add_option("--spec", synth_spec, "JSON generator spec");
  CLI::Option *seed_opt =
      synth->add_option("--rng-seed", synth_seed, "overrides the spec seed");
  synth->add_option("--out", synth_out, "corpus path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (*train) return Train(train_args);
    if (*baseline) {
      if (*gamma_opt) lp.gamma = gamma;
      return Baseline(baseline_args, system, lp);
    }
    if (*export_interp) {
      if (*epoch_opt) export_args.epoch = export_epoch;
      return ExportInterp(export_args);
    }
    if (*classify) {
      return ClassifyEntities(classify_corpus, classify_dl, classify_out);
    }
    if (*eval) return Eval(eval_args);
    if (*synth) {
      return Synth(synth_spec,
                   *seed_opt ? std::optional<uint64_t>(synth_seed)
                             : std::nullopt,
                   synth_out);
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace emboot
