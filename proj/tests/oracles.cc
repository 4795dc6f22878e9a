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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <tuple>

namespace emboot::oracle {
namespace {

long double LogSig(long double x) { return -std::log1p(std::exp(-x)); }

long double DotL(const std::vector<double> &a, const std::vector<double> &b) {
  long double s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    s += static_cast<long double>(a[i]) * static_cast<long double>(b[i]);
  }
  return s;
}

std::string Join(const std::vector<std::string> &tokens, size_t begin,
                 size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += tokens[i];
  }
  return out;
}

Matrix Transitions(const Matrix &features, double gamma) {
  const size_t n = features.size();
  Matrix t(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (size_t j = 0; j < n; ++j) {
      double d2 = 0.0;
      for (size_t k = 0; k < features[i].size(); ++k) {
        const double d = features[i][k] - features[j][k];
        d2 += d * d;
      }
      t[i][j] = std::exp(-gamma * d2);
      row += t[i][j];
    }
    for (size_t j = 0; j < n; ++j) t[i][j] /= row;
  }
  return t;
}

}  // namespace

double Objective(const Params &params, const Counts &counts,
                 const std::vector<Pool> &pools,
                 const std::vector<std::vector<int>> &negatives) {
  long double sg = 0, attract = 0, repel = 0;
  for (size_t e = 0; e < counts.size(); ++e) {
    for (size_t p = 0; p < counts[e].size(); ++p) {
      if (counts[e][p] == 0) continue;
      sg += static_cast<long double>(counts[e][p]) *
            LogSig(DotL(params.entities[e], params.patterns[p]));
    }
  }
  for (size_t e = 0; e < negatives.size(); ++e) {
    for (int p : negatives[e]) {
      sg += LogSig(-DotL(params.entities[e], params.patterns[p]));
    }
  }
  // Pool members as (is_pattern, id).
  std::vector<std::vector<std::pair<bool, int>>> members;
  for (const Pool &pool : pools) {
    std::vector<std::pair<bool, int>> m;
    for (int e : pool.entities) m.emplace_back(false, e);
    for (int p : pool.patterns) m.emplace_back(true, p);
    members.push_back(m);
  }
  auto vec = [&](std::pair<bool, int> x) -> const std::vector<double> & {
    return x.first ? params.patterns[x.second] : params.entities[x.second];
  };
  for (const auto &m : members) {
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = i + 1; j < m.size(); ++j) {
        attract += LogSig(DotL(vec(m[i]), vec(m[j])));
      }
    }
  }
  for (size_t a = 0; a < members.size(); ++a) {
    for (size_t b = a + 1; b < members.size(); ++b) {
      for (const auto &x : members[a]) {
        for (const auto &y : members[b]) repel += LogSig(-DotL(vec(x), vec(y)));
      }
    }
  }
  return static_cast<double>(sg + attract + repel);
}

Params NumericGradient(const std::function<double(const Params &)> &f,
                       Params at, double h) {
  Params grad = at;
  auto sweep = [&](Matrix &rows, Matrix &out) {
    for (size_t r = 0; r < rows.size(); ++r) {
      for (size_t k = 0; k < rows[r].size(); ++k) {
        const double saved = rows[r][k];
        rows[r][k] = saved + h;
        const double up = f(at);
        rows[r][k] = saved - h;
        const double down = f(at);
        rows[r][k] = saved;
        out[r][k] = (up - down) / (2.0 * h);
      }
    }
  };
  sweep(at.entities, grad.entities);
  sweep(at.patterns, grad.patterns);
  return grad;
}

CooccurrenceMatrix Instance::Cooc() const {
  std::vector<std::tuple<int32_t, int32_t, int64_t>> triples;
  for (size_t e = 0; e < counts.size(); ++e) {
    for (size_t p = 0; p < counts[e].size(); ++p) {
      if (counts[e][p] != 0) {
        triples.emplace_back(static_cast<int32_t>(e), static_cast<int32_t>(p),
                             counts[e][p]);
      }
    }
  }
  return CooccurrenceMatrix::FromTriples(params.entities.size(),
                                         params.patterns.size(), triples);
}

PoolState Instance::Pools() const {
  std::vector<std::string> names;
  for (size_t c = 0; c < pools.size(); ++c) names.push_back("C" + std::to_string(c));
  PoolState state(names);
  for (size_t c = 0; c < pools.size(); ++c) {
    for (int e : pools[c].entities) state.AddEntity(c, e, 0);
    for (int p : pools[c].patterns) state.AddPattern(c, p, 0);
  }
  return state;
}

EmbeddingTable Instance::Table() const {
  const size_t dim = params.entities.empty() ? params.patterns[0].size()
                                             : params.entities[0].size();
  EmbeddingTable table(params.entities.size(), params.patterns.size(), dim);
  for (size_t e = 0; e < params.entities.size(); ++e) {
    std::copy(params.entities[e].begin(), params.entities[e].end(),
              table.entity(static_cast<int32_t>(e)).begin());
  }
  for (size_t p = 0; p < params.patterns.size(); ++p) {
    std::copy(params.patterns[p].begin(), params.patterns[p].end(),
              table.pattern(static_cast<int32_t>(p)).begin());
  }
  return table;
}

Instance RandomInstance(int entities, int patterns, int dim, int categories,
                        int pool_entities, int pool_patterns, int negatives,
                        std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> value(-0.5, 0.5);
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> pattern(0, patterns - 1);
  Instance inst;
  inst.params.entities.assign(entities, std::vector<double>(dim));
  inst.params.patterns.assign(patterns, std::vector<double>(dim));
  for (auto &row : inst.params.entities) for (double &x : row) x = value(rng);
  for (auto &row : inst.params.patterns) for (double &x : row) x = value(rng);
  inst.counts.assign(entities, std::vector<int64_t>(patterns, 0));
  for (auto &row : inst.counts) {
    for (auto &c : row) c = std::max(0, count(rng) - 1);
  }
  std::vector<int> ent_ids(entities), pat_ids(patterns);
  for (int i = 0; i < entities; ++i) ent_ids[i] = i;
  for (int i = 0; i < patterns; ++i) pat_ids[i] = i;
  std::shuffle(ent_ids.begin(), ent_ids.end(), rng);
  std::shuffle(pat_ids.begin(), pat_ids.end(), rng);
  inst.pools.resize(categories);
  size_t next_e = 0, next_p = 0;
  for (int c = 0; c < categories; ++c) {
    for (int i = 0; i < pool_entities && next_e < ent_ids.size(); ++i) {
      inst.pools[c].entities.push_back(ent_ids[next_e++]);
    }
    for (int i = 0; i < pool_patterns && next_p < pat_ids.size(); ++i) {
      inst.pools[c].patterns.push_back(pat_ids[next_p++]);
    }
  }
  inst.negatives.assign(entities, {});
  for (auto &row : inst.negatives) {
    for (int i = 0; i < negatives; ++i) row.push_back(pattern(rng));
  }
  return inst;
}

double RecountPmi(const std::vector<Sentence> &sentences,
                  const std::vector<Span> &spans, int window,
                  const std::vector<std::string> &pooled,
                  const std::string &pattern) {
  const std::set<std::string> pool(pooled.begin(), pooled.end());
  int64_t n_pc = 0, n_p = 0, n_c = 0, n = 0;
  for (const Span &span : spans) {
    const Sentence &s = sentences[span.sentence];
    const bool in_pool = pool.count(Join(s, span.start, span.end)) > 0;
    std::vector<std::string> generated;
    for (size_t k = 1; k <= static_cast<size_t>(window) && k <= span.start; ++k) {
      generated.push_back(Join(s, span.start - k, span.start) + " @ENTITY");
    }
    for (size_t k = 1;
         k <= static_cast<size_t>(window) && span.end + k <= s.size(); ++k) {
      generated.push_back("@ENTITY " + Join(s, span.end, span.end + k));
    }
    for (const std::string &g : generated) {
      ++n;
      if (in_pool) ++n_c;
      if (g == pattern) {
        ++n_p;
        if (in_pool) ++n_pc;
      }
    }
  }
  if (n_pc == 0) return -std::numeric_limits<double>::infinity();
  return std::log((static_cast<double>(n_pc) * static_cast<double>(n)) /
                  (static_cast<double>(n_p) * static_cast<double>(n_c)));
}

size_t EditDistance(const std::u32string &a, const std::u32string &b) {
  std::map<std::pair<size_t, size_t>, size_t> memo;
  std::function<size_t(size_t, size_t)> d = [&](size_t i, size_t j) -> size_t {
    if (i == 0) return j;
    if (j == 0) return i;
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    const size_t best = std::min({d(i - 1, j) + 1, d(i, j - 1) + 1,
                                  d(i - 1, j - 1) + (a[i - 1] != b[j - 1])});
    memo[{i, j}] = best;
    return best;
  };
  return d(a.size(), b.size());
}

Matrix PropagateLabels(const Matrix &features, double gamma,
                       const std::vector<int> &labels, int classes,
                       double tolerance, int max_iterations) {
  const size_t n = features.size();
  const Matrix t = Transitions(features, gamma);
  Matrix f(n, std::vector<double>(classes, 1.0 / classes));
  auto clamp = [&](Matrix &m) {
    for (size_t i = 0; i < n; ++i) {
      if (labels[i] < 0) continue;
      std::fill(m[i].begin(), m[i].end(), 0.0);
      m[i][labels[i]] = 1.0;
    }
  };
  clamp(f);
  for (int iter = 0; iter < max_iterations; ++iter) {
    Matrix next(n, std::vector<double>(classes, 0.0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        for (int c = 0; c < classes; ++c) next[i][c] += t[i][j] * f[j][c];
      }
    }
    clamp(next);
    double change = 0.0;
    for (size_t i = 0; i < n; ++i) {
      for (int c = 0; c < classes; ++c) {
        change = std::max(change, std::abs(next[i][c] - f[i][c]));
      }
    }
    f = next;
    if (change < tolerance) break;
  }
  return f;
}

Matrix HarmonicLabels(const Matrix &features, double gamma,
                      const std::vector<int> &labels, int classes) {
  const size_t n = features.size();
  const Matrix t = Transitions(features, gamma);
  std::vector<size_t> unlabeled;
  for (size_t i = 0; i < n; ++i) {
    if (labels[i] < 0) unlabeled.push_back(i);
  }
  const size_t u = unlabeled.size();
  // Augmented system [I - T_UU | T_UL Y_L].
  Matrix a(u, std::vector<double>(u + classes, 0.0));
  for (size_t r = 0; r < u; ++r) {
    for (size_t c = 0; c < u; ++c) {
      a[r][c] = (r == c ? 1.0 : 0.0) - t[unlabeled[r]][unlabeled[c]];
    }
    for (size_t j = 0; j < n; ++j) {
      if (labels[j] >= 0) a[r][u + labels[j]] += t[unlabeled[r]][j];
    }
  }
  for (size_t col = 0; col < u; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < u; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (size_t r = 0; r < u; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (size_t k = col; k < u + classes; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  Matrix f(n, std::vector<double>(classes, 0.0));
  for (size_t i = 0; i < n; ++i) {
    if (labels[i] >= 0) f[i][labels[i]] = 1.0;
  }
  for (size_t r = 0; r < u; ++r) {
    for (int c = 0; c < classes; ++c) f[unlabeled[r]][c] = a[r][u + c] / a[r][r];
  }
  return f;
}

}  // namespace emboot::oracle
