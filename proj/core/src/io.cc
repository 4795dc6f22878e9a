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

#include "emboot/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "emboot/errors.h"

namespace emboot {
namespace {

using Json = nlohmann::ordered_json;

std::string Fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  // "-0.000000" and "0.000000" should not differ between runs that only
  // disagree on the sign of a tiny value.
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}

// JSON has no fixed-point notation; round so the shortest round-trip form
// has at most six fractional digits.
double Round6(double x) {
  if (!std::isfinite(x)) return x;
  const double r = std::round(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

Json ParseJson(std::istream &in, const char *what) {
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    throw ParseError(std::string("invalid ") + what + ": " + e.what());
  }
}

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

double ParseDouble(const std::string &s, size_t line) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw ParseError(line, "not a number: '" + s + "'");
  }
  return v;
}

}  // namespace

SeedList ReadSeeds(std::istream &in) {
  const Json json = ParseJson(in, "seeds file");
  if (!json.is_object()) throw ParseError("seeds file must be a JSON object");
  SeedList seeds;
  for (const auto &[category, list] : json.items()) {
    if (!list.is_array()) {
      throw ParseError("seeds for '" + category + "' must be an array");
    }
    std::vector<std::string> surfaces;
    for (const Json &s : list) {
      if (!s.is_string()) {
        throw ParseError("seeds for '" + category + "' must be strings");
      }
      surfaces.push_back(s.get<std::string>());
    }
    seeds.emplace_back(category, std::move(surfaces));
  }
  return seeds;
}

void WriteSeeds(const SeedList &seeds, std::ostream &out) {
  Json json = Json::object();
  for (const auto &[category, surfaces] : seeds) json[category] = surfaces;
  out << json.dump(2) << '\n';
}

SynthSpec ReadSynthSpec(std::istream &in) {
  const Json json = ParseJson(in, "synth spec");
  if (!json.is_object()) throw ParseError("synth spec must be a JSON object");
  SynthSpec spec;
  for (const auto &[key, value] : json.items()) {
    try {
      if (key == "categories") {
        spec.categories = value.get<int>();
      } else if (key == "entities_per_category") {
        spec.entities_per_category = value.get<int>();
      } else if (key == "patterns_per_category") {
        spec.patterns_per_category = value.get<int>();
      } else if (key == "mentions_per_entity") {
        spec.mentions_per_entity = value.get<double>();
      } else if (key == "noise_rate") {
        spec.noise_rate = value.get<double>();
      } else if (key == "rng_seed") {
        spec.rng_seed = value.get<uint64_t>();
      } else if (key == "generic_patterns") {
        spec.generic_patterns = value.get<int>();
      } else if (key == "generic_rate") {
        spec.generic_rate = value.get<double>();
      } else if (key == "pretrained_dim") {
        spec.pretrained_dim = value.get<int>();
      } else if (key == "pretrained_signal") {
        spec.pretrained_signal = value.get<double>();
      } else if (key == "context_signal") {
        spec.context_signal = value.get<double>();
      } else if (key == "seeds_per_category") {
        spec.seeds_per_category = value.get<int>();
      } else {
        throw ParseError("unknown synth spec key '" + key + "'");
      }
    } catch (const Json::exception &e) {
      throw ParseError("bad value for '" + key + "': " + e.what());
    }
  }
  spec.Validate();
  return spec;
}

void WriteTrace(const Trace &trace, const Vocabulary &entities,
                const PatternVocabulary &patterns, std::ostream &out) {
  for (size_t t = 0; t < trace.snapshots.size(); ++t) {
    const PoolState &pools = trace.snapshots[t];
    Json line = Json::object();
    line["system"] = trace.system;
    line["epoch"] = t;
    Json by_category = Json::object();
    for (size_t c = 0; c < pools.num_categories(); ++c) {
      Json ents = Json::array();
      for (const PoolEntry &e : pools.entities(c)) {
        if (e.epoch != static_cast<int>(t)) continue;
        ents.push_back({{"item", entities.key(e.id)}, {"score", Round6(e.score)}});
      }
      Json pats = Json::array();
      for (const PoolEntry &p : pools.patterns(c)) {
        if (p.epoch != static_cast<int>(t)) continue;
        pats.push_back(
            {{"item", patterns.rendered(p.id)}, {"score", Round6(p.score)}});
      }
      by_category[pools.categories()[c]] = {{"entities", std::move(ents)},
                                            {"patterns", std::move(pats)}};
    }
    line["pools"] = std::move(by_category);
    out << line.dump() << '\n';
  }
}

Trace ReadTrace(std::istream &in, const Vocabulary &entities,
                const PatternVocabulary &patterns) {
  Trace trace;
  PoolState pools;
  std::string text;
  size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty()) continue;
    Json line;
    try {
      line = Json::parse(text);
      const int epoch = line.at("epoch").get<int>();
      if (epoch != static_cast<int>(trace.snapshots.size())) {
        throw ParseError(line_no, "trace epochs must count up from 0");
      }
      const Json &by_category = line.at("pools");
      if (trace.snapshots.empty()) {
        trace.system = line.at("system").get<std::string>();
        std::vector<std::string> names;
        for (const auto &[name, unused] : by_category.items()) {
          names.push_back(name);
        }
        pools = PoolState(names);
      }
      for (const auto &[name, pool] : by_category.items()) {
        const auto c = pools.CategoryIndex(name);
        if (!c) throw ParseError(line_no, "unknown category '" + name + "'");
        for (const Json &e : pool.at("entities")) {
          const std::string surface = e.at("item").get<std::string>();
          const auto id = entities.Find(surface);
          if (!id) throw ParseError(line_no, "unknown entity '" + surface + "'");
          pools.AddEntity(*c, *id, epoch, e.at("score").get<double>());
        }
        for (const Json &p : pool.at("patterns")) {
          const std::string rendered = p.at("item").get<std::string>();
          const auto id = patterns.Find(rendered);
          if (!id) {
            throw ParseError(line_no, "unknown pattern '" + rendered + "'");
          }
          pools.AddPattern(*c, *id, epoch, p.at("score").get<double>());
        }
      }
    } catch (const Json::exception &e) {
      throw ParseError(line_no, std::string("bad trace line: ") + e.what());
    } catch (const ConfigError &e) {
      throw ParseError(line_no, e.what());
    }
    trace.snapshots.push_back(pools);
  }
  if (trace.snapshots.empty()) throw ParseError(line_no, "empty trace");
  return trace;
}

void WriteEmbeddings(const EmbeddingTable &table, const Vocabulary &entities,
                     const PatternVocabulary &patterns, std::ostream &out) {
  auto row = [&](const std::string &name, std::span<const double> v) {
    out << name;
    for (double x : v) out << '\t' << Fixed(x);
    out << '\n';
  };
  for (size_t e = 0; e < table.num_entities(); ++e) {
    const auto id = static_cast<int32_t>(e);
    row("E:" + entities.key(id), table.entity(id));
  }
  for (size_t p = 0; p < table.num_patterns(); ++p) {
    const auto id = static_cast<int32_t>(p);
    row("P:" + patterns.rendered(id), table.pattern(id));
  }
}

EmbeddingTable ReadEmbeddings(std::istream &in, const Vocabulary &entities,
                              const PatternVocabulary &patterns) {
  EmbeddingTable table;
  std::vector<bool> seen_entity(entities.size(), false);
  std::vector<bool> seen_pattern(patterns.size(), false);
  std::string text;
  size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty()) continue;
    const std::vector<std::string> fields = SplitTabs(text);
    const size_t dim = fields.size() - 1;
    if (dim == 0) throw ParseError(line_no, "row has no components");
    if (table.dim() == 0) {
      table = EmbeddingTable(entities.size(), patterns.size(), dim);
    } else if (dim != table.dim()) {
      throw ParseError(line_no, "expected " + std::to_string(table.dim()) +
                                    " components, found " +
                                    std::to_string(dim));
    }
    const std::string &name = fields.front();
    std::span<double> row;
    if (name.rfind("E:", 0) == 0) {
      const auto id = entities.Find(std::string_view(name).substr(2));
      if (!id) throw ParseError(line_no, "unknown entity '" + name + "'");
      if (seen_entity[*id]) throw ParseError(line_no, "duplicate '" + name + "'");
      seen_entity[*id] = true;
      row = table.entity(*id);
    } else if (name.rfind("P:", 0) == 0) {
      const auto id = patterns.Find(std::string_view(name).substr(2));
      if (!id) throw ParseError(line_no, "unknown pattern '" + name + "'");
      if (seen_pattern[*id]) {
        throw ParseError(line_no, "duplicate '" + name + "'");
      }
      seen_pattern[*id] = true;
      row = table.pattern(*id);
    } else {
      throw ParseError(line_no, "row name must start with E: or P:");
    }
    for (size_t i = 0; i < dim; ++i) {
      row[i] = ParseDouble(fields[i + 1], line_no);
    }
  }
  auto all = [](const std::vector<bool> &seen) {
    return std::find(seen.begin(), seen.end(), false) == seen.end();
  };
  const bool complete = all(seen_entity) && all(seen_pattern);
  if (!complete || table.dim() == 0) {
    throw ParseError(line_no, "embeddings do not cover the corpus vocabulary");
  }
  return table;
}

void WriteDecisionList(const DecisionList &dl,
                       const PatternVocabulary &patterns, std::ostream &out) {
  out << "pattern";
  for (const std::string &c : dl.categories()) out << '\t' << c;
  out << "\tpool\n";
  for (const DecisionEntry &entry : dl.entries()) {
    out << patterns.rendered(entry.pattern);
    for (double p : entry.probabilities) out << '\t' << Fixed(p);
    out << '\t' << dl.categories()[entry.pool] << '\n';
  }
}

DecisionList ReadDecisionList(std::istream &in,
                              const PatternVocabulary &patterns) {
  std::string text;
  if (!std::getline(in, text)) throw ParseError(1, "missing header");
  std::vector<std::string> header = SplitTabs(text);
  if (header.size() < 3 || header.front() != "pattern" ||
      header.back() != "pool") {
    throw ParseError(1, "header must be: pattern, categories..., pool");
  }
  std::vector<std::string> categories(header.begin() + 1, header.end() - 1);
  std::vector<DecisionEntry> entries;
  size_t line_no = 1;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty()) continue;
    const std::vector<std::string> fields = SplitTabs(text);
    if (fields.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                    " columns, found " +
                                    std::to_string(fields.size()));
    }
    const auto id = patterns.Find(fields.front());
    if (!id) throw ParseError(line_no, "unknown pattern '" + fields[0] + "'");
    DecisionEntry entry;
    entry.pattern = *id;
    for (size_t c = 0; c < categories.size(); ++c) {
      entry.probabilities.push_back(ParseDouble(fields[c + 1], line_no));
    }
    const auto pool =
        std::find(categories.begin(), categories.end(), fields.back());
    if (pool == categories.end()) {
      throw ParseError(line_no, "unknown pool '" + fields.back() + "'");
    }
    entry.pool = static_cast<size_t>(pool - categories.begin());
    entries.push_back(std::move(entry));
  }
  return DecisionList(std::move(categories), std::move(entries), 0);
}

void WriteMetrics(const std::string &system,
                  const std::vector<CurvePoint> &curve, std::ostream &out) {
  out << "system,epoch,throughput,precision\n";
  for (const CurvePoint &p : curve) {
    out << system << ',' << p.epoch << ',' << p.throughput << ','
        << Fixed(p.precision) << '\n';
  }
}

void WriteWordVectors(const WordVectors &vectors, std::ostream &out) {
  for (const std::string &w : vectors.words()) {
    const std::span<const double> v = *vectors.Find(w);
    out << w;
    for (double x : v) out << '\t' << Fixed(x);
    out << '\n';
  }
}

void WritePatternTruth(
    const std::unordered_map<std::string, std::string> &truth,
    std::ostream &out) {
  std::vector<std::pair<std::string, std::string>> rows(truth.begin(),
                                                        truth.end());
  std::sort(rows.begin(), rows.end());
  for (const auto &[pattern, category] : rows) {
    out << pattern << '\t' << category << '\n';
  }
}

}  // namespace emboot
