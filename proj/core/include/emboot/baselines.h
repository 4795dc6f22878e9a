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

// Comparison systems: explicit pattern-based bootstrapping (EPB), its
// pretrained-embedding decision list, and label-propagation bootstrapping.

#ifndef EMBOOT_BASELINES_H_
#define EMBOOT_BASELINES_H_

#include "emboot/bootstrap.h"
#include "emboot/decision_list.h"
#include "emboot/label_propagation.h"

namespace emboot {

// RunBootstrap without embedding training and with the custom-cosine
// features zeroed. The trace is tagged "epb".
BootstrapResult RunEpb(BootstrapConfig config, const CorpusIndex &index,
                       const PoolState &seeds, const WordVectors *pretrained);

// Decision list over the final pools of an EPB trace, built from pretrained
// word-averaged vectors.
DecisionList BuildEpbDecisionList(const Trace &epb_trace,
                                  const CorpusIndex &index,
                                  const WordVectors &pretrained);

// Each epoch runs label propagation over the entity x pattern count rows,
// ranks unlabeled entities by ascending entropy, and adds each to its argmax
// category until every category has taken entities_per_epoch entities.
// Only config.epochs and config.entities_per_epoch are read from `config`.
// The trace is tagged "lp"; promotion scores are the argmax probabilities.
Trace RunLpBootstrap(const BootstrapConfig &config, const CorpusIndex &index,
                     const PoolState &seeds,
                     const LabelPropagationConfig &lp = {});

}  // namespace emboot

#endif  // EMBOOT_BASELINES_H_
