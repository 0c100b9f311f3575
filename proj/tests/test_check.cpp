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

#include "aafl/check.hpp"

#include "aafl/reduce.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;

namespace {

const std::vector<FrameClass> kClasses{FrameClass::K, FrameClass::K45, FrameClass::S5};

Formula G(const std::string& text) { return parse_formula(text, testing::kGrantAgents); }

}  // namespace

TEST_CASE("basic evaluation") {
  PointedKripkeModel w1 = testing::grant_model("w1");
  CHECK(eval_basic(w1, G("p")));
  CHECK_FALSE(eval_basic(w1, G("[ed] p")));
  PointedKripkeModel both = w1;
  both.designated = {0, 1};
  CHECK_FALSE(eval_basic(both, G("p")));
  PointedKripkeModel none = w1;
  none.designated.clear();
  CHECK(eval_basic(none, G("false")));
  CHECK_THROWS_AS(eval_basic(w1, G("[?p] p")), InputError);
  CHECK_THROWS_AS(eval_basic(w1, parse_formula("[zed] p", {"zed"})), InputError);
}

TEST_CASE("checking the grant examples") {
  PointedKripkeModel w1 = testing::grant_model("w1");
  for (const char* f : {"[L{ed}(?p)] [ed] p", "<*> [ed] p"}) {
    CHECK(check(w1, G(f), FrameClass::K));
    CHECK(check_via_reduction(w1, G(f), FrameClass::K));
  }
  CHECK_FALSE(check(testing::grant_model("w2"), G("<?p> true"), FrameClass::K));
  CHECK(check(w1, G("[?p] q") , FrameClass::K) == eval_basic(w1, G("p -> q")));
}

TEST_CASE("class violations are rejected") {
  PointedKripkeModel lone =
      point(make_model({"a"}, {"w"}, {}, {{"a", {}}}), {"w"});
  CHECK_THROWS_AS(check(lone, parse_formula("p", {"a"}), FrameClass::S5), InputError);
  CHECK_NOTHROW(check(lone, parse_formula("p", {"a"}), FrameClass::K45));
}

TEST_CASE("multi-pointed checking is a conjunction") {
  Rng rng(101);
  FormulaShape shape;
  shape.max_dynamic = 1;
  for (const FrameClass c : kClasses) {
    for (int i = 0; i < 40; ++i) {
      PointedKripkeModel m = sample_model(c, 4, testing::kVocab, rng);
      Formula f = sample_formula(shape, testing::kVocab, rng);
      bool all = true;
      for (std::size_t s = 0; s < m.model.size(); ++s)
        all = all && check(PointedKripkeModel{m.model, {static_cast<int>(s)}}, f, c);
      PointedKripkeModel every = m;
      every.designated.clear();
      for (std::size_t s = 0; s < m.model.size(); ++s) every.designated.push_back(static_cast<int>(s));
      CHECK(check(every, f, c) == all);
    }
  }
}

TEST_CASE("the two checking paths agree") {
  Rng rng(102);
  FormulaShape shape;
  shape.max_dynamic = 2;
  shape.max_refinement = 1;
  for (const FrameClass c : kClasses) {
    for (int i = 0; i < 60; ++i) {
      PointedKripkeModel m = sample_model(c, 4, testing::kVocab, rng);
      Formula f = sample_formula(shape, testing::kVocab, rng);
      CHECK(check(m, f, c) == check_via_reduction(m, f, c));
    }
  }
}

TEST_CASE("samplers respect their bounds") {
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_formula(0, testing::kVocab, rng()) .op() != Op::Box);
    CHECK(is_propositional(sample_formula(0, testing::kVocab, rng())));
    FormulaShape shape;
    shape.depth = 2;
    CHECK(modal_depth(sample_formula(shape, testing::kVocab, rng)) <= 2);
    PointedKripkeModel m = sample_model(FrameClass::K, 5, testing::kVocab, rng);
    CHECK(m.model.size() <= 5);
    CHECK(m.designated.size() == 1);
  }
  CHECK(sample_formula(2, testing::kVocab, 9) == sample_formula(2, testing::kVocab, 9));
  CHECK(sample_action(2, testing::kVocab, 9) == sample_action(2, testing::kVocab, 9));
}
