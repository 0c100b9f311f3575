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

#include <algorithm>
#include <numeric>

#include "aafl/check.hpp"

namespace aafl {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

std::vector<std::string> agent_list(const Vocabulary& v) { return {v.agents.begin(), v.agents.end()}; }

Relation random_relation(FrameClass c, int n, Rng& rng) {
  Relation r(n);
  if (c == FrameClass::S5) {
    std::vector<int> cls(n);
    for (int& x : cls) x = uniform(rng, 0, n - 1);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (cls[u] == cls[w]) r[u].push_back(w);
    return r;
  }
  const double p = c == FrameClass::K ? 0.4 : 0.25;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (coin(rng, p)) r[u].push_back(w);
  return c == FrameClass::K45 ? close_relation(r, c) : r;
}

struct FormulaGen {
  const FormulaShape& shape;
  const Vocabulary& v;
  Rng& rng;
  std::vector<std::string> agents;
  int dyn;
  int ref;
  int binary = 0;  // binary connectives left, reset per formula

  Formula leaf() {
    if (v.atoms.empty() || coin(rng, 0.08)) return coin(rng, 0.5) ? top() : bottom();
    Formula p = atom(pick(rng, v.atoms));
    return coin(rng, 0.3) ? neg(p) : p;
  }

  Formula gen(int d) {
    if (d <= 0 || coin(rng, 0.2)) return leaf();
    enum Choice { Not, And, Or, Imp, Box, Dia, Cov, Dyn, Ref };
    std::vector<Choice> menu = {Not, Box, Box, Dia, Dia};
    if (binary > 0) menu.insert(menu.end(), {And, And, Or, Or, Imp});
    if (shape.cover) menu.push_back(Cov);
    if (dyn > 0) menu.insert(menu.end(), {Dyn, Dyn, Dyn});
    if (ref > 0) menu.insert(menu.end(), {Ref, Ref, Ref});
    const Choice kind = pick(rng, menu);
    switch (kind) {
      case Not: return neg(gen(d));
      case And:
      case Or:
      case Imp: {
        --binary;
        // Sequenced so the draw order does not depend on argument evaluation order.
        Formula x = gen(d);
        Formula y = gen(d);
        return kind == And ? conj(x, y) : kind == Or ? disj(x, y) : implies(x, y);
      }
      case Box:
      case Dia: {
        const std::string& a = pick(rng, agents);
        Formula x = gen(d - 1);
        return kind == Box ? box(a, x) : diamond(a, x);
      }
      case Cov: {
        const std::string& a = pick(rng, agents);
        std::vector<Formula> ms;
        for (int i = uniform(rng, 0, 2); i > 0; --i) ms.push_back(gen(d - 1));
        return cover(a, ms);
      }
      case Dyn: {
        --dyn;
        Action a = action(shape.action_depth);
        Formula body = gen(d - 1);
        return coin(rng, 0.5) ? dyn_box(a, body) : dyn_diamond(a, body);
      }
      case Ref: {
        --ref;
        Formula body = gen(d - 1);
        return coin(rng, 0.5) ? ref_box(body) : ref_diamond(body);
      }
    }
    return leaf();
  }

  Formula top_level(int d) {
    binary = shape.max_binary;
    return gen(d);
  }

  Formula basic(int d) {
    int saved_dyn = dyn, saved_ref = ref, saved_binary = binary;
    dyn = ref = 0;
    Formula f = top_level(d);
    dyn = saved_dyn;
    ref = saved_ref;
    binary = saved_binary;
    return f;
  }

  AgentSet subset() {
    AgentSet b;
    for (const auto& a : agents)
      if (coin(rng, 0.5)) b.insert(a);
    if (b.empty()) b.insert(pick(rng, agents));
    return b;
  }

  Action action(int d) {
    if (d <= 0 || coin(rng, 0.25)) return test(basic(shape.test_depth));
    switch (uniform(rng, 0, 4)) {
      case 0: {
        Action x = action(d - 1);
        return choice(x, action(d - 1));
      }
      case 1: {
        Action x = action(d - 1);
        return compose(x, action(d - 1));
      }
      case 2: {
        AgentSet b = subset();
        Action x = action(d - 1);
        return learn(b, x, action(d - 1));
      }
      default: {
        AgentSet b = subset();
        return learn(b, action(d - 1));
      }
    }
  }
};

}  // namespace

PointedKripkeModel sample_model(FrameClass c, int max_states, const Vocabulary& v, Rng& rng) {
  if (max_states < 1) throw InputError("max_states must be positive");
  const int n = uniform(rng, 1, max_states);
  KripkeModel m;
  m.agents = v.agents;
  for (int i = 0; i < n; ++i) {
    m.states.push_back("s" + std::to_string(i));
    std::set<std::string> val;
    for (const auto& p : v.atoms)
      if (coin(rng, 0.5)) val.insert(p);
    m.valuation.push_back(std::move(val));
  }
  for (const auto& a : v.agents) m.relations[a] = random_relation(c, n, rng);
  return PointedKripkeModel{std::move(m), {uniform(rng, 0, n - 1)}};
}

PointedKripkeModel sample_model(FrameClass c, int max_states, const AgentSet& agents,
                                const std::vector<std::string>& atoms, std::uint64_t seed) {
  Rng rng(seed);
  return sample_model(c, max_states, Vocabulary{agents, atoms}, rng);
}

Formula sample_formula(const FormulaShape& shape, const Vocabulary& v, Rng& rng) {
  FormulaGen g{shape, v, rng, agent_list(v), shape.max_dynamic, shape.max_refinement};
  return g.top_level(shape.depth);
}

Formula sample_formula(int depth, const Vocabulary& v, std::uint64_t seed) {
  Rng rng(seed);
  FormulaShape shape;
  shape.depth = depth;
  return sample_formula(shape, v, rng);
}

Action sample_action(const FormulaShape& shape, const Vocabulary& v, Rng& rng) {
  FormulaGen g{shape, v, rng, agent_list(v), 0, 0};
  return g.action(shape.action_depth);
}

Action sample_action(int depth, const Vocabulary& v, std::uint64_t seed) {
  Rng rng(seed);
  FormulaShape shape;
  shape.action_depth = depth;
  return sample_action(shape, v, rng);
}

PointedActionModel sample_action_model(FrameClass c, int max_points, const Vocabulary& v, int pre_depth, Rng& rng) {
  if (max_points < 1) throw InputError("max_points must be positive");
  const int n = uniform(rng, 1, max_points);
  FormulaShape shape;
  FormulaGen g{shape, v, rng, agent_list(v), 0, 0};
  PointedActionModel out;
  ActionModel& a = out.model;
  a.agents = v.agents;
  for (int i = 0; i < n; ++i) {
    a.points.push_back("e" + std::to_string(i));
    a.pre.push_back(coin(rng, 0.3) ? top() : g.basic(pre_depth));
  }
  for (const auto& ag : v.agents) a.relations[ag] = random_relation(c, n, rng);
  out.designated = {uniform(rng, 0, n - 1)};
  return out;
}

}  // namespace aafl
