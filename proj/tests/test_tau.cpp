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

#include "aafl/tau.hpp"

#include <algorithm>

#include "aafl/bisim.hpp"
#include "aafl/check.hpp"
#include "aafl/prover.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;
using aafl::testing::A;
using aafl::testing::F;

namespace {

const std::vector<FrameClass> kClasses{FrameClass::K, FrameClass::K45, FrameClass::S5};

bool edge(const PointedActionModel& a, const std::string& ag, const std::string& from, const std::string& to) {
  const auto& succ = a.model.relations.at(ag)[a.model.index_of(from)];
  return std::find(succ.begin(), succ.end(), a.model.index_of(to)) != succ.end();
}

PointedKripkeModel run(const PointedKripkeModel& m, const PointedActionModel& a, FrameClass c) {
  Checker ch(m.model, c);
  return execute(m, a, [&](int s, Formula f) { return ch.truth(f)[s] != 0; });
}

}  // namespace

TEST_CASE("test in K and K45") {
  for (const FrameClass c : {FrameClass::K, FrameClass::K45}) {
    PointedActionModel t = tau(A("?p"), c, {"a", "b"});
    REQUIRE(t.model.size() == 2);
    CHECK(t.model.points[t.designated.at(0)] == "t@test");
    for (const char* ag : {"a", "b"}) {
      CHECK(edge(t, ag, "t@test", "skip@test"));
      CHECK(edge(t, ag, "skip@test", "skip@test"));
      CHECK_FALSE(edge(t, ag, "t@test", "t@test"));
    }
    CHECK(t.model.pre[t.model.index_of("t@test")] == F("p"));
    CHECK(t.model.pre[t.model.index_of("skip@test")] == top());
  }
}

TEST_CASE("test in S5 has universal relations") {
  PointedActionModel t = tau(A("?p"), FrameClass::S5, {"a", "b"});
  REQUIRE(t.model.size() == 2);
  for (const auto& [ag, r] : t.model.relations)
    for (const auto& succ : r) CHECK(succ.size() == 2);
  CHECK(am_frame_class_holds(t.model, FrameClass::S5));
}

TEST_CASE("learning in K") {
  PointedActionModel t = tau(A("L{a}(?p)"), FrameClass::K, {"a", "b"});
  REQUIRE(t.model.size() == 4);
  CHECK(t.model.points[t.designated.at(0)] == "t@L");
  CHECK(edge(t, "a", "t@L", "t@L.0.test"));
  CHECK(edge(t, "b", "t@L", "skip@L"));
  CHECK(edge(t, "a", "skip@L", "skip@L"));
  CHECK_FALSE(edge(t, "a", "t@L", "skip@L"));
  CHECK(t.model.pre[t.model.index_of("t@L")] == top());

  // The binary form learns about both operands.
  PointedActionModel u = tau(A("L{a}(?p, ?q)"), FrameClass::K, {"a", "b"});
  CHECK(u.model.relations.at("a")[u.designated.at(0)].size() == 2);
}

TEST_CASE("learning in K45 uses mutually connected proxies") {
  PointedActionModel t = tau(A("L{a}(?p, ?q)"), FrameClass::K45, {"a", "b"});
  CHECK(am_frame_class_holds(t.model, FrameClass::K45));
  const auto& succ = t.model.relations.at("a")[t.designated.at(0)];
  REQUIRE(succ.size() == 2);
  for (int x : succ)
    for (int y : succ) CHECK(std::binary_search(t.model.relations.at("a")[x].begin(), t.model.relations.at("a")[x].end(), y));
}

TEST_CASE("learning in S5 designates the first operand only") {
  PointedActionModel t = tau(A("L{a}(?p, ?q)"), FrameClass::S5, {"a", "b"});
  CHECK(am_frame_class_holds(t.model, FrameClass::S5));
  REQUIRE(t.designated.size() == 1);
  CHECK(t.model.pre[t.designated[0]] == F("p"));
  CHECK(t.model.relations.at("a")[t.designated[0]].size() >= 2);
}

TEST_CASE("translations stay in class") {
  Rng rng(61);
  FormulaShape shape;
  shape.action_depth = 3;
  for (const FrameClass c : {FrameClass::K45, FrameClass::S5}) {
    for (int i = 0; i < 60; ++i) {
      Action a = sample_action(shape, testing::kVocab, rng);
      CHECK(am_frame_class_holds(tau(a, c, testing::kVocab.agents).model, c));
      CHECK(am_frame_class_holds(tau(a, c, testing::kVocab.agents, true).model, c));
      PointedKripkeModel m = sample_model(c, 4, testing::kVocab, rng);
      PointedKripkeModel r = run(m, tau(a, c, testing::kVocab.agents, true), c);
      CHECK(frame_class_holds(r.model, c));
    }
  }
}

TEST_CASE("tests are pure guards") {
  Rng rng(62);
  for (const FrameClass c : kClasses) {
    for (int i = 0; i < 40; ++i) {
      PointedKripkeModel m = sample_model(c, 4, testing::kVocab, rng);
      Formula phi = sample_formula(1, testing::kVocab, rng());
      PointedKripkeModel r = run(m, tau(test(phi), c, testing::kVocab.agents), c);
      if (eval_basic(m, phi)) {
        REQUIRE(r.designated.size() == 1);
        CHECK(bisimilar(r, m));
      } else {
        CHECK(r.designated.empty());
      }
    }
  }
}

TEST_CASE("minimal translations execute bisimilarly") {
  Rng rng(63);
  for (const FrameClass c : kClasses) {
    for (int i = 0; i < 40; ++i) {
      Action a = sample_action(2, testing::kVocab, rng());
      PointedKripkeModel m = sample_model(c, 3, testing::kVocab, rng);
      PointedKripkeModel full = run(m, tau(a, c, testing::kVocab.agents), c);
      PointedKripkeModel small = run(m, tau(a, c, testing::kVocab.agents, true), c);
      CHECK(full.designated.empty() == small.designated.empty());
      if (!full.designated.empty()) CHECK(bisimilar(full, small));
    }
  }
}

TEST_CASE("learning a test yields knowledge in K") {
  Rng rng(64);
  for (int i = 0; i < 60; ++i) {
    Formula phi = sample_formula(1, testing::kVocab, rng());
    Formula f = dyn_box(learn({"a"}, test(phi), test(phi)), box("a", phi));
    PointedKripkeModel m = sample_model(FrameClass::K, 4, testing::kVocab, rng);
    CHECK(check(m, f, FrameClass::K));
  }
}
