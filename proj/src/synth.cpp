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

#include "aafl/synth.hpp"

#include <map>
#include <unordered_map>

#include "aafl/check.hpp"
#include "aafl/normform.hpp"
#include "aafl/prover.hpp"
#include "aafl/reduce.hpp"
#include "aafl/tau.hpp"

namespace aafl {

namespace {

using Memo = std::unordered_map<Formula, Action, FormulaHash>;

Memo& synth_memo(FrameClass c) {
  thread_local std::map<int, Memo> memos;
  return memos[static_cast<int>(c)];
}

Action synth_clauses(const Dnf& d, FrameClass c) {
  std::vector<Action> options;
  for (const auto& clause : d.clauses) {
    Formula whole = clause.pi;
    for (const auto& [a, gamma] : clause.covers) whole = mk_and(whole, cover(a, gamma));
    std::vector<Action> steps{test(reduce_exists(whole, c))};
    for (const auto& [a, gamma] : clause.covers) {
      std::vector<Action> learned;
      for (Formula g : gamma) learned.push_back(synthesize(g, c));
      steps.push_back(learn({a}, learned.empty() ? test(bottom()) : choice_all(learned)));
    }
    options.push_back(compose_all(steps));
  }
  return options.empty() ? test(bottom()) : choice_all(options);
}

// Drops needs implied by gamma0 or by another kept need.  Needs are cover
// members, so Cov(x, y) with x -> y follows from Cov(x): the pruned witness
// is stronger and its guard is unchanged.
void prune_needs(S5Witness& w) {
  for (auto& [a, needs] : w.needs) {
    std::vector<Formula> kept{needs[0]};
    std::vector<Formula> rest(needs.begin() + 1, needs.end());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool implied = valid(mk_implies(w.gamma0, rest[i]), FrameClass::S5);
      for (std::size_t j = 0; j < rest.size() && !implied; ++j)
        implied = j != i && rest[j].valid() && valid(mk_implies(rest[j], rest[i]), FrameClass::S5);
      if (implied) rest[i] = Formula();
    }
    for (Formula nu : rest)
      if (nu.valid()) kept.push_back(nu);
    needs = std::move(kept);
  }
}

// Nested learning rooted at the synthesis of gamma0: each agent's class is
// fixed at the level where it is the learner.
Action synth_s5(Formula goal) {
  std::vector<Action> options;
  for (S5Witness w : s5_witnesses(goal)) {
    prune_needs(w);
    Formula g0 = reduce_exists(w.gamma0, FrameClass::S5);
    std::vector<Formula> parts{w.pi, g0};
    for (const auto& [a, needs] : w.needs)
      for (Formula nu : needs) parts.push_back(mk_diamond(a, reduce_exists(nu, FrameClass::S5)));
    Action nested = synthesize(w.gamma0, FrameClass::S5);
    for (auto it = w.needs.rbegin(); it != w.needs.rend(); ++it) {
      std::vector<Action> learned;
      for (Formula nu : it->second) learned.push_back(synthesize(nu, FrameClass::S5));
      nested = learn({it->first}, nested, choice_all(learned));
    }
    options.push_back(compose_all({test(conj_all(parts)), test(g0), nested}));
  }
  return options.empty() ? test(bottom()) : choice_all(options);
}

}  // namespace

Action synthesize(Formula goal, FrameClass c) {
  if (!is_basic(goal)) throw InputError("synthesis goals must be basic formulae");
  Memo& memo = synth_memo(c);
  auto it = memo.find(goal);
  if (it != memo.end()) return it->second;
  Action r;
  if (is_propositional(goal)) {
    r = test(goal);
  } else {
    switch (c) {
      case FrameClass::K: r = synth_clauses(*to_dnf(goal), c); break;
      case FrameClass::K45: r = synth_clauses(*to_adnf(goal), c); break;
      case FrameClass::S5: r = synth_s5(goal); break;
    }
  }
  memo.emplace(goal, r);
  return r;
}

SynthesisReport verify_synthesis(Formula goal, Action alpha, FrameClass c, int trials, std::uint64_t seed,
                                 int max_states) {
  if (!is_basic(goal)) throw InputError("synthesis goals must be basic formulae");
  Vocabulary v;
  v.agents = agents_of(goal);
  for (const auto& a : agents_of(alpha)) v.agents.insert(a);
  if (v.agents.empty()) v.agents.insert("a");
  for (const auto& p : atoms_of(goal)) v.atoms.push_back(p);
  for (const auto& p : atoms_of(alpha))
    if (!atoms_of(goal).count(p)) v.atoms.push_back(p);
  if (v.atoms.empty()) v.atoms.push_back("p");

  const PointedActionModel a = tau(alpha, c, v.agents, true);
  const Formula achievable = reduce(ref_diamond(goal), c);
  Rng rng(seed);
  SynthesisReport rep;
  for (int i = 0; i < trials; ++i) {
    PointedKripkeModel m = sample_model(c, max_states, v, rng);
    ++rep.trials;
    const bool can = eval_basic(m, achievable);
    rep.exists_true += can;
    Checker pre(m.model, c);
    ++rep.attempted;
    PointedKripkeModel r = execute(m, a, [&](int s, Formula f) { return pre.truth(f)[s] != 0; }, nullptr, true);
    const bool in_class = frame_class_holds(r.model, c);
    bool any = false, all = true;
    for (int d : r.designated) {
      const bool sat = eval_basic(PointedKripkeModel{r.model, {d}}, goal);
      any = any || sat;
      all = all && sat;
    }
    const bool success = !r.designated.empty() && in_class;
    rep.succeeded += success;
    rep.goal_satisfied += success && all;
    bool failed = false;
    if (!r.designated.empty() && (!in_class || !all)) {
      ++rep.necessity_failures;
      failed = true;
    }
    if (can && (!success || !any)) {
      ++rep.sufficiency_failures;
      failed = true;
    }
    if (failed) rep.counterexamples.push_back(model_to_json(m));
  }
  return rep;
}

}  // namespace aafl
