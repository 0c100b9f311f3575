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

#include "aafl/correspond.hpp"

#include "aafl/bisim.hpp"
#include "aafl/check.hpp"
#include "aafl/tau.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;
using aafl::testing::F;

namespace {

const std::vector<FrameClass> kClasses{FrameClass::K, FrameClass::K45, FrameClass::S5};

PointedActionModel single_point(const AgentSet& agents, Formula pre) {
  PointedActionModel a;
  a.model.agents = agents;
  a.model.points = {"e"};
  a.model.pre = {pre};
  for (const auto& ag : agents) a.model.relations[ag] = Relation{{0}};
  a.designated = {0};
  return a;
}

PointedKripkeModel run(const PointedKripkeModel& m, const PointedActionModel& a, FrameClass c) {
  Checker ch(m.model, c);
  return execute(m, a, [&](int s, Formula f) { return ch.truth(f)[s] != 0; });
}

}  // namespace

TEST_CASE("depth zero is the precondition test") {
  PointedActionModel a = single_point({"a", "b"}, F("p & [b] q"));
  for (const FrameClass c : kClasses) CHECK(correspond(a, 0, c) == test(F("p & [b] q")));
}

TEST_CASE("public announcement in K") {
  PointedActionModel a = single_point({"a", "b"}, F("p"));
  Action x = correspond(a, 1, FrameClass::K);
  CHECK(am_n_bisimilar(tau(x, FrameClass::K, {"a", "b"}), a, 1, FrameClass::K));
  CHECK(print_action(x).find("L{a}") != std::string::npos);
  CHECK(print_action(x).find("L{b}") != std::string::npos);
}

TEST_CASE("identity in S5") {
  PointedActionModel a = single_point({"a", "b"}, top());
  Action x = correspond(a, 2, FrameClass::S5);
  CHECK(am_n_bisimilar(tau(x, FrameClass::S5, {"a", "b"}), a, 2, FrameClass::S5));
}

TEST_CASE("empty successor sets in K") {
  PointedActionModel a = single_point({"a", "b"}, F("p"));
  a.model.relations["a"] = Relation{{}};
  for (int n = 0; n <= 2; ++n) CHECK(am_n_bisimilar(tau(correspond(a, n, FrameClass::K), FrameClass::K, {"a", "b"}), a, n, FrameClass::K));
}

TEST_CASE("random action models up to depth two") {
  Rng rng(81);
  for (const FrameClass c : kClasses) {
    for (int i = 0; i < 30; ++i) {
      PointedActionModel a = sample_action_model(c, 4, testing::kVocab, 1, rng);
      for (int n = 0; n <= 2; ++n) {
        PointedActionModel t = tau(correspond(a, n, c), c, testing::kVocab.agents, true);
        CHECK(am_n_bisimilar(t, a, n, c));
        for (int m = 0; m < n; ++m) CHECK(am_n_bisimilar(t, a, m, c));
      }
    }
  }
}

TEST_CASE("formulas of depth n cannot tell the two apart") {
  Rng rng(82);
  for (const FrameClass c : kClasses) {
    for (int i = 0; i < 20; ++i) {
      PointedActionModel a = sample_action_model(c, 3, testing::kVocab, 1, rng);
      PointedActionModel t = tau(correspond(a, 1, c), c, testing::kVocab.agents, true);
      PointedKripkeModel m = sample_model(c, 3, testing::kVocab, rng);
      PointedKripkeModel r1 = run(m, a, c);
      PointedKripkeModel r2 = run(m, t, c);
      CHECK(r1.designated.empty() == r2.designated.empty());
      if (r1.designated.empty()) continue;
      for (int k = 0; k < 10; ++k) {
        Formula f = sample_formula(1, testing::kVocab, rng());
        CHECK(eval_basic(r1, f) == eval_basic(r2, f));
      }
    }
  }
}

TEST_CASE("multiple designated points become a choice") {
  PointedActionModel a = single_point({"a"}, F("p", {"a"}));
  a.model.points.push_back("f");
  a.model.pre.push_back(F("q", {"a"}));
  a.model.relations["a"] = Relation{{0, 1}, {1}};
  a.designated = {0};
  CHECK(correspond_multi(a, 1, FrameClass::K) == correspond(a, 1, FrameClass::K));
  a.designated = {0, 1};
  Action x = correspond_multi(a, 1, FrameClass::K);
  REQUIRE(x.op() == ActOp::Choice);
  CHECK(am_n_bisimilar(tau(x, FrameClass::K, {"a"}), a, 1, FrameClass::K));
}

TEST_CASE("inputs outside the class are rejected") {
  PointedActionModel a = single_point({"a"}, F("p", {"a"}));
  a.model.relations["a"] = Relation{{}};
  CHECK_THROWS_AS(correspond(a, 1, FrameClass::S5), InputError);
  PointedActionModel d = single_point({"a"}, F("[?p] p", {"a"}));
  CHECK_THROWS_AS(correspond(d, 1, FrameClass::K), InputError);
}
