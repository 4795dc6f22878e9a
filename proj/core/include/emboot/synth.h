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

// Synthetic corpora with planted category structure.
//
// Every category owns a set of context patterns (half LEFT, half RIGHT,
// 1-3 tokens of words unique to that pattern) and a set of name words. An
// entity is 1-3 name words of its category. Each mention is one sentence
//
//   [left context] [entity tokens] [right context]
//
// where each side's context is drawn from the entity's own category with
// probability 1 - noise_rate and from a different category otherwise. With
// probability generic_rate a side instead uses a generic context shared by
// all categories.

#ifndef EMBOOT_SYNTH_H_
#define EMBOOT_SYNTH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "emboot/corpus.h"
#include "emboot/pools.h"
#include "emboot/word_vectors.h"

namespace emboot {

struct SynthSpec {
  int categories = 4;
  int entities_per_category = 250;
  int patterns_per_category = 20;
  double mentions_per_entity = 5.0;
  double noise_rate = 0.1;
  uint64_t rng_seed = 1;

  // Generic contexts shared by every category.
  int generic_patterns = 0;
  double generic_rate = 0.0;

  // Pretrained word vectors emitted alongside the corpus. Name words get
  // their category's direction scaled by pretrained_signal. Each context
  // gets the direction of a category drawn uniformly at random, independent
  // of the category it frames, scaled by context_signal (a word like
  // "President" is person-like yet frames nationalities).
  int pretrained_dim = 50;
  double pretrained_signal = 0.5;
  double context_signal = 0.5;
  int seeds_per_category = 10;

  // Throws ConfigError unless counts are >= 1, mentions_per_entity >= 1,
  // and noise_rate, generic_rate are in [0, 1).
  void Validate() const;
};

struct SynthCorpus {
  Corpus corpus;  // with gold labels
  // Rendered pattern -> planted category, for every pattern the window-4
  // generator can emit from a planted context. Generic contexts are absent.
  std::unordered_map<std::string, std::string> pattern_truth;
  WordVectors pretrained;
  // Most frequent entities per category.
  SeedList seeds;
};

SynthCorpus GenerateSynthCorpus(const SynthSpec &spec);

// Category names: LOC, ORG, PER, MISC for up to four categories, else
// CAT0, CAT1, ...
std::vector<std::string> SynthCategoryNames(int categories);

}  // namespace emboot

#endif  // EMBOOT_SYNTH_H_
