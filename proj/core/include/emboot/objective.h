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

// The embedding objective J = SG + Attract + Repel and its gradient.
//
//   SG      = sum_e [ sum_pp n(e,pp) log s(V_e . V_pp)
//                     + sum_{np in neg(e)} log s(-V_e . V_np) ]
//   Attract = sum_c sum_{x1 < x2 in P_c} log s(V_x1 . V_x2)
//   Repel   = sum_{c1 < c2} sum_{x1 in P_c1, x2 in P_c2} log s(-V_x1 . V_x2)
//
// P_c is the union of category c's entity pool and pattern pool. Every term
// is a log-sigmoid, so J <= 0.

#ifndef EMBOOT_OBJECTIVE_H_
#define EMBOOT_OBJECTIVE_H_

#include <cstdint>
#include <vector>

#include "emboot/cooccurrence.h"
#include "emboot/embedding.h"
#include "emboot/pools.h"

namespace emboot {

// Negative patterns per entity id. Entities past the end have none.
using NegativeAssignment = std::vector<std::vector<int32_t>>;

struct ObjectiveTerms {
  double sg = 0.0;
  double attract = 0.0;
  double repel = 0.0;

  double total() const { return sg + attract + repel; }
};

// Throws ConfigError if a pooled item, a co-occurring pair, or a negative
// refers to a row the table does not have.
ObjectiveTerms EvaluateObjective(const EmbeddingTable &table,
                                 const CooccurrenceMatrix &cooc,
                                 const PoolState &pools,
                                 const NegativeAssignment &negatives);

inline double Objective(const EmbeddingTable &table,
                        const CooccurrenceMatrix &cooc, const PoolState &pools,
                        const NegativeAssignment &negatives) {
  return EvaluateObjective(table, cooc, pools, negatives).total();
}

// dJ/dV for every row, shaped like `table`.
EmbeddingTable ObjectiveGradient(const EmbeddingTable &table,
                                 const CooccurrenceMatrix &cooc,
                                 const PoolState &pools,
                                 const NegativeAssignment &negatives);

// Scale of the gradient of log s(+/- u.v) with respect to u along v:
// d/du log s(sign * u.v) = sign * s(-sign * u.v) * v.
inline double LogSigmoidSlope(double dot, double sign) {
  return sign * Sigmoid(-sign * dot);
}

}  // namespace emboot

#endif  // EMBOOT_OBJECTIVE_H_
