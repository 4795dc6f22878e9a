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

#include "emboot/synth.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "emboot/cooccurrence.h"
#include "emboot/errors.h"

namespace emboot {
namespace {

constexpr const char *kOnsets[] = {"b", "d", "f", "g", "k", "l", "m", "n",
                                   "p", "r", "s", "t", "v", "z", "br", "st",
                                   "tr", "kl", "sh", "ch"};
constexpr const char *kVowels[] = {"a", "e", "i", "o", "u", "ai", "ou", "ei"};

struct PlantedContext {
  Side side;
  std::vector<std::string> tokens;
};

class WordFactory {
 public:
  explicit WordFactory(std::mt19937_64 *rng) : rng_(rng) {}

  std::string Fresh(bool capitalized) {
    std::uniform_int_distribution<int> syllables(2, 3);
    std::uniform_int_distribution<size_t> onset(0, std::size(kOnsets) - 1);
    std::uniform_int_distribution<size_t> vowel(0, std::size(kVowels) - 1);
    for (;;) {
      std::string word;
      const int n = syllables(*rng_);
      for (int i = 0; i < n; ++i) {
        word += kOnsets[onset(*rng_)];
        word += kVowels[vowel(*rng_)];
      }
      if (capitalized) word[0] = static_cast<char>(std::toupper(word[0]));
      if (used_.insert(word).second) return word;
    }
  }

 private:
  std::mt19937_64 *rng_;
  std::unordered_set<std::string> used_;
};

std::vector<double> GaussianVector(size_t dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(dim));
  std::vector<double> v(dim);
  for (double &x : v) x = normal(rng);
  return v;
}

std::vector<PlantedContext> MakeContexts(int count, int max_length,
                                         WordFactory &words,
                                         std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> length(1, max_length);
  std::vector<PlantedContext> contexts;
  for (int i = 0; i < count; ++i) {
    PlantedContext context;
    context.side = i % 2 == 0 ? Side::kLeft : Side::kRight;
    const int n = length(rng);
    for (int j = 0; j < n; ++j) context.tokens.push_back(words.Fresh(false));
    contexts.push_back(std::move(context));
  }
  return contexts;
}

}  // namespace

void SynthSpec::Validate() const {
  if (categories < 1 || entities_per_category < 1 ||
      patterns_per_category < 1 || seeds_per_category < 1) {
    throw ConfigError("synthetic corpus counts must be >= 1");
  }
  if (patterns_per_category < 2) {
    throw ConfigError("need at least one LEFT and one RIGHT pattern");
  }
  if (!(mentions_per_entity >= 1.0)) {
    throw ConfigError("mentions per entity must be >= 1");
  }
  if (!(noise_rate >= 0.0 && noise_rate < 1.0) ||
      !(generic_rate >= 0.0 && generic_rate < 1.0)) {
    throw ConfigError("noise and generic rates must lie in [0, 1)");
  }
  if (generic_rate > 0.0 && generic_patterns < 2) {
    throw ConfigError("generic contexts need at least two generic patterns");
  }
  if (pretrained_dim < 1) throw ConfigError("pretrained dimension must be >= 1");
  if (!(pretrained_signal >= 0.0) || !(context_signal >= 0.0)) {
    throw ConfigError("pretrained signal strengths must be >= 0");
  }
}

std::vector<std::string> SynthCategoryNames(int categories) {
  static const std::vector<std::string> kNamed = {"LOC", "ORG", "PER", "MISC"};
  std::vector<std::string> names;
  for (int c = 0; c < categories; ++c) {
    names.push_back(categories <= 4 ? kNamed[c] : "CAT" + std::to_string(c));
  }
  return names;
}

SynthCorpus GenerateSynthCorpus(const SynthSpec &spec) {
  spec.Validate();
  std::mt19937_64 rng(spec.rng_seed);
  WordFactory words(&rng);
  const std::vector<std::string> names = SynthCategoryNames(spec.categories);
  const size_t num_categories = names.size();

  SynthCorpus out;

  // Planted contexts and their generated patterns.
  std::vector<std::vector<PlantedContext>> contexts(num_categories);
  for (size_t c = 0; c < num_categories; ++c) {
    contexts[c] = MakeContexts(spec.patterns_per_category, 3, words, rng);
    for (const PlantedContext &context : contexts[c]) {
      const size_t len = context.tokens.size();
      for (size_t n = 1; n <= len; ++n) {
        Pattern p;
        p.side = context.side;
        if (context.side == Side::kLeft) {
          p.tokens.assign(context.tokens.end() - static_cast<std::ptrdiff_t>(n),
                          context.tokens.end());
        } else {
          p.tokens.assign(context.tokens.begin(),
                          context.tokens.begin() + static_cast<std::ptrdiff_t>(n));
        }
        out.pattern_truth.emplace(RenderPattern(p), names[c]);
      }
    }
  }
  std::vector<PlantedContext> generic =
      MakeContexts(spec.generic_patterns, 2, words, rng);

  // Name words and entities.
  struct Entity {
    std::string surface;
    std::vector<std::string> tokens;
    size_t category;
    int mentions;
  };
  std::vector<Entity> entities;
  std::unordered_set<std::string> surfaces;
  std::discrete_distribution<int> entity_length({3.0, 5.0, 2.0});
  std::poisson_distribution<int> extra_mentions(spec.mentions_per_entity - 1.0);
  std::vector<std::vector<std::string>> name_words(num_categories);
  for (size_t c = 0; c < num_categories; ++c) {
    for (int i = 0; i < spec.entities_per_category; ++i) {
      name_words[c].push_back(words.Fresh(true));
    }
    std::uniform_int_distribution<size_t> pick(0, name_words[c].size() - 1);
    for (int i = 0; i < spec.entities_per_category; ++i) {
      Entity entity;
      entity.category = c;
      do {
        entity.tokens.clear();
        const int n = entity_length(rng) + 1;
        for (int j = 0; j < n; ++j) {
          entity.tokens.push_back(name_words[c][pick(rng)]);
        }
        entity.surface.clear();
        for (const std::string &t : entity.tokens) {
          if (!entity.surface.empty()) entity.surface += ' ';
          entity.surface += t;
        }
      } while (!surfaces.insert(entity.surface).second);
      entity.mentions = 1 + extra_mentions(rng);
      entities.push_back(std::move(entity));
    }
  }

  // Mentions, one sentence each, in shuffled order.
  std::vector<size_t> mention_entities;
  for (size_t e = 0; e < entities.size(); ++e) {
    for (int m = 0; m < entities[e].mentions; ++m) mention_entities.push_back(e);
  }
  std::shuffle(mention_entities.begin(), mention_entities.end(), rng);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto pick_context = [&](size_t category, Side side) -> const PlantedContext & {
    const std::vector<PlantedContext> *source = &contexts[category];
    const double u = unit(rng);
    if (u < spec.generic_rate) {
      source = &generic;
    } else if (num_categories > 1 && unit(rng) < spec.noise_rate) {
      std::uniform_int_distribution<size_t> other(0, num_categories - 2);
      size_t c = other(rng);
      if (c >= category) ++c;
      source = &contexts[c];
    }
    std::vector<size_t> sided;
    for (size_t i = 0; i < source->size(); ++i) {
      if ((*source)[i].side == side) sided.push_back(i);
    }
    std::uniform_int_distribution<size_t> pick(0, sided.size() - 1);
    return (*source)[sided[pick(rng)]];
  };

  for (size_t e : mention_entities) {
    const Entity &entity = entities[e];
    const PlantedContext &left = pick_context(entity.category, Side::kLeft);
    const PlantedContext &right = pick_context(entity.category, Side::kRight);
    Sentence sentence = left.tokens;
    Span span{out.corpus.sentences.size(), sentence.size(), 0};
    sentence.insert(sentence.end(), entity.tokens.begin(), entity.tokens.end());
    span.end = sentence.size();
    sentence.insert(sentence.end(), right.tokens.begin(), right.tokens.end());
    out.corpus.sentences.push_back(std::move(sentence));
    out.corpus.mentions.push_back(Mention{span, names[entity.category]});
  }

  // Pretrained vectors.
  const size_t dim = static_cast<size_t>(spec.pretrained_dim);
  std::vector<std::vector<double>> directions;
  for (size_t c = 0; c < num_categories; ++c) {
    std::vector<double> d = GaussianVector(dim, rng);
    double norm = 0.0;
    for (double x : d) norm += x * x;
    norm = std::sqrt(norm);
    for (double &x : d) x /= norm;
    directions.push_back(std::move(d));
  }
  out.pretrained = WordVectors(dim);
  std::uniform_int_distribution<size_t> topic(0, num_categories - 1);
  auto add_context_words = [&](const std::vector<PlantedContext> &list) {
    for (const PlantedContext &context : list) {
      const std::vector<double> &direction = directions[topic(rng)];
      for (const std::string &t : context.tokens) {
        std::vector<double> v = GaussianVector(dim, rng);
        for (size_t i = 0; i < dim; ++i) {
          v[i] += spec.context_signal * direction[i];
        }
        out.pretrained.Add(t, std::move(v));
      }
    }
  };
  for (size_t c = 0; c < num_categories; ++c) {
    for (const std::string &w : name_words[c]) {
      std::vector<double> v = GaussianVector(dim, rng);
      for (size_t i = 0; i < dim; ++i) {
        v[i] += spec.pretrained_signal * directions[c][i];
      }
      out.pretrained.Add(w, std::move(v));
    }
    add_context_words(contexts[c]);
  }
  add_context_words(generic);

  // Seeds: most frequent entities per category, generation order on ties.
  for (size_t c = 0; c < num_categories; ++c) {
    std::vector<size_t> members;
    for (size_t e = 0; e < entities.size(); ++e) {
      if (entities[e].category == c) members.push_back(e);
    }
    std::stable_sort(members.begin(), members.end(), [&](size_t a, size_t b) {
      return entities[a].mentions > entities[b].mentions;
    });
    std::vector<std::string> seeds;
    for (size_t i = 0;
         i < members.size() && i < static_cast<size_t>(spec.seeds_per_category);
         ++i) {
      seeds.push_back(entities[members[i]].surface);
    }
    out.seeds.emplace_back(names[c], std::move(seeds));
  }
  return out;
}

}  // namespace emboot
