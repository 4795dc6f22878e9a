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


#include <benchmark/benchmark.h>

#include "emboot/bootstrap.h"
#include "emboot/edit_distance.h"
#include "emboot/features.h"
#include "emboot/objective.h"
#include "emboot/synth.h"
#include "emboot/trainer.h"

namespace emboot {
namespace {

struct Setup {
  SynthCorpus synth;
  CorpusIndex index;
  PoolState seeds;
};

const Setup &Shared() {
  static const Setup *setup = [] {
    auto *s = new Setup;
    SynthSpec spec;
    spec.entities_per_category = 100;
    s->synth = GenerateSynthCorpus(spec);
    s->index = BuildCorpusIndex(s->synth.corpus.WithoutLabels());
    s->seeds = InitPools(s->synth.seeds, s->index.entities);
    return s;
  }();
  return *setup;
}

// One inner training call, swept over the embedding dimension.
void BM_TrainInner(benchmark::State &state) {
  const Setup &s = Shared();
  TrainConfig config;
  config.inner_epochs = 10;
  const size_t dim = static_cast<size_t>(state.range(0));
  const auto table = EmbeddingTable::Random(s.index.entities.size(),
                                            s.index.patterns.size(), dim, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(TrainInner(table, s.index.cooc, s.seeds, config));
  }
  state.SetItemsProcessed(state.iterations() * config.inner_epochs *
                          s.index.cooc.total());
}
BENCHMARK(BM_TrainInner)->Arg(5)->Arg(15)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ObjectiveGradient(benchmark::State &state) {
  const Setup &s = Shared();
  std::mt19937_64 rng(1);
  const auto negatives = SampleNegativeAssignment(s.index.cooc, 5, rng);
  const auto table = EmbeddingTable::Random(s.index.entities.size(),
                                            s.index.patterns.size(), 15, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ObjectiveGradient(table, s.index.cooc, s.seeds, negatives));
  }
}
BENCHMARK(BM_ObjectiveGradient)->Unit(benchmark::kMillisecond);

void BM_EditDistance(benchmark::State &state) {
  const std::u32string a = DecodeUtf8("Kloubeitra Shaizou");
  const std::u32string b = DecodeUtf8("Klaubeitro Shouzai Ven");
  for (auto _ : state) benchmark::DoNotOptimize(NormalizedEditDistance(a, b));
}
BENCHMARK(BM_EditDistance);

void BM_Featurize(benchmark::State &state) {
  const Setup &s = Shared();
  const auto table = EmbeddingTable::Random(s.index.entities.size(),
                                            s.index.patterns.size(), 15, 1);
  FeatureExtractor extractor(s.index, &s.synth.pretrained);
  extractor.Prepare(s.seeds, &table);
  int32_t entity = 0;
  const auto n = static_cast<int32_t>(s.index.entities.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(extractor.Featurize(entity));
    entity = (entity + 1) % n;
  }
}
BENCHMARK(BM_Featurize);

}  // namespace
}  // namespace emboot

BENCHMARK_MAIN();
