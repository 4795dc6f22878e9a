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

// Run artifacts. Every decimal is written with six fractional digits so
// repeated runs diff cleanly.

#ifndef EMBOOT_IO_H_
#define EMBOOT_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "emboot/bootstrap.h"
#include "emboot/decision_list.h"
#include "emboot/evaluation.h"
#include "emboot/synth.h"

namespace emboot {

// {"LOC": ["Paris", ...], ...}; key order is kept.
SeedList ReadSeeds(std::istream &in);
void WriteSeeds(const SeedList &seeds, std::ostream &out);

// Spec keys match the SynthSpec field names; missing keys keep defaults and
// unknown keys are an error.
SynthSpec ReadSynthSpec(std::istream &in);

// One JSON object per snapshot:
//   {"system": s, "epoch": t, "pools": {cat: {"entities": [...],
//    "patterns": [...]}}}
// listing only the items added at epoch t as {"item": surface, "score": x}.
void WriteTrace(const Trace &trace, const Vocabulary &entities,
                const PatternVocabulary &patterns, std::ostream &out);
// Rebuilds the cumulative snapshots. Throws ParseError on malformed lines or
// items missing from the vocabularies.
Trace ReadTrace(std::istream &in, const Vocabulary &entities,
                const PatternVocabulary &patterns);

// E:<surface> or P:<pattern>, then the components, tab separated.
void WriteEmbeddings(const EmbeddingTable &table, const Vocabulary &entities,
                     const PatternVocabulary &patterns, std::ostream &out);
// Every vocabulary item must appear exactly once.
EmbeddingTable ReadEmbeddings(std::istream &in, const Vocabulary &entities,
                              const PatternVocabulary &patterns);

// Header: pattern, one column per category, pool. Rows in list order.
void WriteDecisionList(const DecisionList &dl,
                       const PatternVocabulary &patterns, std::ostream &out);
DecisionList ReadDecisionList(std::istream &in,
                              const PatternVocabulary &patterns);

// system,epoch,throughput,precision
void WriteMetrics(const std::string &system,
                  const std::vector<CurvePoint> &curve, std::ostream &out);

void WriteWordVectors(const WordVectors &vectors, std::ostream &out);

// Pattern -> category table, one "pattern<TAB>category" row each, sorted.
void WritePatternTruth(
    const std::unordered_map<std::string, std::string> &truth,
    std::ostream &out);

}  // namespace emboot

#endif  // EMBOOT_IO_H_
