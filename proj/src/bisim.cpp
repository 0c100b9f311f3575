/* Copyright 2026 The aafl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "aafl/bisim.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "aafl/prover.hpp"

namespace aafl {

namespace {

// Coloured graph over the disjoint union of two structures.
struct Graph {
  std::vector<int> colour;
  std::map<std::string, Relation> rel;
  std::vector<int> left, right;  // designated points of each side
};

void require_same_agents(const AgentSet& a, const AgentSet& b) {
  if (a != b) throw InputError("models are over different agent sets");
}

Graph kripke_graph(const PointedKripkeModel& m1, const PointedKripkeModel& m2) {
  require_same_agents(m1.model.agents, m2.model.agents);
  DisjointUnion u = disjoint_union(m1.model, m2.model);
  Graph g;
  std::map<std::set<std::string>, int> ids;
  for (const auto& val : u.model.valuation) g.colour.push_back(ids.emplace(val, ids.size()).first->second);
  g.rel = u.model.relations;
  for (int s : m1.designated) g.left.push_back(u.left[s]);
  for (int s : m2.designated) g.right.push_back(u.right[s]);
  return g;
}

// Colours are classes of provably equivalent preconditions. Points whose
// precondition is unsatisfiable never execute, so they are left out.
Graph action_graph(const PointedActionModel& a1, const PointedActionModel& a2, FrameClass c) {
  require_same_agents(a1.model.agents, a2.model.agents);
  const int n1 = static_cast<int>(a1.model.size());
  std::vector<Formula> pres = a1.model.pre;
  pres.insert(pres.end(), a2.model.pre.begin(), a2.model.pre.end());
  for (Formula p : pres)
    if (!is_basic(p)) throw InputError("action-model bisimulation needs basic preconditions");
  std::vector<int> keep(pres.size(), -1);
  Graph g;
  std::vector<Formula> reps;
  for (std::size_t k = 0; k < pres.size(); ++k) {
    Formula p = pres[k];
    if (p.op() == Op::Bottom || !satisfiable(p, c)) continue;
    int id = -1;
    for (std::size_t i = 0; i < reps.size() && id < 0; ++i)
      if (reps[i] == p || equiv(reps[i], p, c)) id = static_cast<int>(i);
    if (id < 0) {
      id = static_cast<int>(reps.size());
      reps.push_back(p);
    }
    keep[k] = static_cast<int>(g.colour.size());
    g.colour.push_back(id);
  }
  for (const auto& ag : a1.model.agents) {
    Relation r(g.colour.size());
    auto add = [&](const Relation& src, int off) {
      for (std::size_t s = 0; s < src.size(); ++s) {
        int from = keep[s + off];
        if (from < 0) continue;
        for (int t : src[s])
          if (keep[t + off] >= 0) r[from].push_back(keep[t + off]);
      }
    };
    add(a1.model.relations.at(ag), 0);
    add(a2.model.relations.at(ag), n1);
    g.rel[ag] = std::move(r);
  }
  for (int t : a1.designated)
    if (keep[t] >= 0) g.left.push_back(keep[t]);
  for (int t : a2.designated)
    if (keep[t + n1] >= 0) g.right.push_back(keep[t + n1]);
  return g;
}

// One refinement round: a block is split by the blocks its successors reach.
std::vector<int> refine_once(const Graph& g, const std::vector<int>& block) {
  using Signature = std::pair<int, std::vector<std::set<int>>>;
  std::map<Signature, int> ids;
  std::vector<int> next(block.size());
  for (std::size_t s = 0; s < block.size(); ++s) {
    Signature sig{block[s], {}};
    for (const auto& [a, r] : g.rel) {
      std::set<int> reach;
      for (int t : r[s]) reach.insert(block[t]);
      sig.second.push_back(std::move(reach));
    }
    next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
  }
  return next;
}

int count_blocks(const std::vector<int>& b) { return b.empty() ? 0 : *std::max_element(b.begin(), b.end()) + 1; }

// Blocks of the coarsest bisimulation, or of n-bisimilarity when rounds is given.
std::vector<int> partition(const Graph& g, std::optional<int> rounds) {
  std::vector<int> block = refine_once(Graph{g.colour, {}, {}, {}}, g.colour);
  for (int i = 0; !rounds || i < *rounds; ++i) {
    std::vector<int> next = refine_once(g, block);
    if (count_blocks(next) == count_blocks(block)) break;
    block = std::move(next);
  }
  return block;
}

bool points_match(const Graph& g, const std::function<bool(int, int)>& related) {
  auto covered = [&](const std::vector<int>& from, const std::vector<int>& to, bool flip) {
    for (int s : from) {
      bool hit = false;
      for (int t : to) hit = hit || (flip ? related(t, s) : related(s, t));
      if (!hit) return false;
    }
    return true;
  };
  return covered(g.left, g.right, false) && covered(g.right, g.left, true);
}

bool same_block(const Graph& g, const std::vector<int>& block) {
  return points_match(g, [&](int s, int t) { return block[s] == block[t]; });
}

}  // namespace

bool bisimilar(const PointedKripkeModel& m1, const PointedKripkeModel& m2) {
  Graph g = kripke_graph(m1, m2);
  return same_block(g, partition(g, std::nullopt));
}

bool n_bisimilar(const PointedKripkeModel& m1, const PointedKripkeModel& m2, int n) {
  if (n < 0) throw InputError("bisimulation depth must be non-negative");
  Graph g = kripke_graph(m1, m2);
  return same_block(g, partition(g, n));
}

bool b_bisimilar(const PointedKripkeModel& m1, const PointedKripkeModel& m2, const AgentSet& b) {
  Graph g = kripke_graph(m1, m2);
  std::vector<int> full = partition(g, std::nullopt);
  auto related = [&](int s, int t) {
    if (g.colour[s] != g.colour[t]) return false;
    for (const auto& a : b) {
      auto it = g.rel.find(a);
      if (it == g.rel.end()) continue;
      std::set<int> x, y;
      for (int u : it->second[s]) x.insert(full[u]);
      for (int u : it->second[t]) y.insert(full[u]);
      if (x != y) return false;
    }
    return true;
  };
  return points_match(g, related);
}

bool refines(const PointedKripkeModel& m1, const PointedKripkeModel& m2) {
  require_same_agents(m1.model.agents, m2.model.agents);
  const auto& a = m1.model;
  const auto& b = m2.model;
  const std::size_t n1 = a.size(), n2 = b.size();
  std::vector<std::vector<char>> sim(n1, std::vector<char>(n2, 0));
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n2; ++v) sim[u][v] = a.valuation[u] == b.valuation[v];
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < n1; ++u)
      for (std::size_t v = 0; v < n2; ++v) {
        if (!sim[u][v]) continue;
        bool ok = true;
        for (const auto& ag : a.agents) {
          for (int u2 : a.succ(ag, static_cast<int>(u))) {
            bool hit = false;
            for (int v2 : b.succ(ag, static_cast<int>(v))) hit = hit || sim[u2][v2];
            if (!hit) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) {
          sim[u][v] = 0;
          changed = true;
        }
      }
  }
  // Every designated point of the refinement is simulated by some point of m2.
  for (int u : m1.designated) {
    bool hit = false;
    for (int v : m2.designated) hit = hit || sim[u][v];
    if (!hit) return false;
  }
  return true;
}

bool am_bisimilar(const PointedActionModel& a1, const PointedActionModel& a2, FrameClass c) {
  Graph g = action_graph(a1, a2, c);
  return same_block(g, partition(g, std::nullopt));
}

bool am_n_bisimilar(const PointedActionModel& a1, const PointedActionModel& a2, int n, FrameClass c) {
  if (n < 0) throw InputError("bisimulation depth must be non-negative");
  Graph g = action_graph(a1, a2, c);
  return same_block(g, partition(g, n));
}

}  // namespace aafl
