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

#include "aafl/check.hpp"
#include "aafl/normform.hpp"
#include "aafl/reduce.hpp"
#include "aafl/tau.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;
using aafl::testing::F;

namespace {

// Four states, q only at s3, one universal b-relation.
PointedKripkeModel s5_counterexample_model() {
  std::vector<std::string> st{"s0", "s1", "s2", "s3"};
  std::vector<std::pair<std::string, std::string>> all;
  for (const auto& x : st)
    for (const auto& y : st) all.push_back({x, y});
  return point(make_model({"b"}, st, {{"s3", {"q"}}}, {{"b", all}}), {"s2"});
}

// The S5 construction read literally: ?E(phi) ; ?E(gamma0) ; L{b}(?true, ...).
Action literal_s5(Formula goal) {
  std::vector<Action> options;
  for (const auto& w : s5_witnesses(goal)) {
    std::vector<Formula> guard{w.pi, reduce_exists(w.gamma0, FrameClass::S5)};
    std::vector<Action> steps;
    for (const auto& [a, needs] : w.needs) {
      std::vector<Action> learned;
      for (Formula nu : needs) {
        guard.push_back(mk_diamond(a, reduce_exists(nu, FrameClass::S5)));
        learned.push_back(synthesize(nu, FrameClass::S5));
      }
      steps.push_back(learn({a}, test(top()), choice_all(learned)));
    }
    steps.insert(steps.begin(), test(conj_all(guard)));
    options.push_back(compose_all(steps));
  }
  return choice_all(options);
}

}  // namespace

TEST_CASE("synthesis examples") {
  const AgentSet ag{"ed"};
  Formula goal = parse_formula("[ed] p", ag);
  Action a = synthesize(goal, FrameClass::K);
  CHECK(print_action(a).find("L{ed}(?p)") != std::string::npos);
  CHECK(verify_synthesis(goal, a, FrameClass::K, 50, 7).ok());

  CHECK(synthesize(F("p"), FrameClass::K) == test(F("p")));
  CHECK(synthesize(bottom(), FrameClass::S5) == test(bottom()));
  CHECK(verify_synthesis(F("p"), test(F("p")), FrameClass::K, 50, 7).ok());
  CHECK_THROWS_AS(synthesize(F("[?p] q"), FrameClass::K), InputError);
}

TEST_CASE("a wrong action is caught") {
  const AgentSet ag{"ed"};
  Formula goal = parse_formula("[ed] p", ag);
  SynthesisReport r = verify_synthesis(goal, test(top()), FrameClass::K, 50, 7);
  CHECK_FALSE(r.ok());
  CHECK(r.sufficiency_failures > 0);
  CHECK(r.counterexamples.size() > 0);
}

TEST_CASE("reports are deterministic in the seed") {
  Formula goal = F("<a> p & [b] ~q");
  for (const FrameClass c : {FrameClass::K, FrameClass::K45, FrameClass::S5}) {
    Action a = synthesize(goal, c);
    SynthesisReport x = verify_synthesis(goal, a, c, 30, 5);
    SynthesisReport y = verify_synthesis(goal, a, c, 30, 5);
    CHECK(x.ok());
    CHECK(x.exists_true == y.exists_true);
    CHECK(x.succeeded == y.succeeded);
    CHECK(x.exists_true > 0);
  }
}

TEST_CASE("contracts on random goals") {
  Rng rng(91);
  for (const FrameClass c : {FrameClass::K, FrameClass::K45, FrameClass::S5}) {
    for (int i = 0; i < 15; ++i) {
      FormulaShape shape;
      shape.depth = 2;
      shape.max_binary = 3;
      Formula goal = sample_formula(shape, testing::kVocab, rng);
      Action a = synthesize(goal, c);
      SynthesisReport r = verify_synthesis(goal, a, c, 20, static_cast<std::uint64_t>(i));
      INFO(to_string(c) << " " << print_formula(goal));
      CHECK(r.ok());
    }
  }
}

TEST_CASE("the literal S5 learning construction misses the goal") {
  // L{b}(?true, x) keeps stale copies of the actual world reachable through
  // the test's skip point, so the b-class is not reset to the learned
  // outcomes.  The nested construction used by synthesize does not.
  const AgentSet ag{"b"};
  Formula goal = parse_formula("~<b> <b> q | q", ag);
  PointedKripkeModel m = s5_counterexample_model();
  REQUIRE(eval_basic(m, reduce(ref_diamond(goal), FrameClass::S5)));

  auto outcome = [&](Action a) {
    PointedActionModel t = tau(a, FrameClass::S5, ag, true);
    Checker ch(m.model, FrameClass::S5);
    return execute(m, t, [&](int s, Formula f) { return ch.truth(f)[s] != 0; });
  };
  PointedKripkeModel literal = outcome(literal_s5(goal));
  REQUIRE_FALSE(literal.designated.empty());
  CHECK_FALSE(eval_basic(literal, goal));

  PointedKripkeModel nested = outcome(synthesize(goal, FrameClass::S5));
  REQUIRE_FALSE(nested.designated.empty());
  CHECK(eval_basic(nested, goal));
}
