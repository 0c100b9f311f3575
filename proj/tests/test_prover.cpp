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

#include "aafl/prover.hpp"

#include "aafl/check.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;
using aafl::testing::F;

TEST_CASE("validity examples") {
  CHECK(valid(F("[a](p -> q) -> ([a]p -> [a]q)"), FrameClass::K));
  CHECK_FALSE(valid(F("[a]p -> p"), FrameClass::K));
  CHECK(valid(F("[a]p -> p"), FrameClass::S5));
  CHECK(valid(F("[a]p -> [a][a]p"), FrameClass::K45));
  CHECK(valid(F("<a>p -> [a]<a>p"), FrameClass::K45));
  CHECK_FALSE(valid(F("[a]p -> [b][a]p"), FrameClass::S5));
  CHECK_THROWS_AS(valid(F("[?p] p"), FrameClass::K), InputError);
}

TEST_CASE("satisfiability and equivalence") {
  CHECK_FALSE(satisfiable(F("p & ~p"), FrameClass::K));
  CHECK(satisfiable(F("<a>p & <a>~p"), FrameClass::S5));
  CHECK_FALSE(satisfiable(bottom(), FrameClass::S5));
  CHECK(equiv(F("<a>p"), expand_cover("a", {F("p"), top()}), FrameClass::K));
  CHECK_FALSE(equiv(F("p"), F("q"), FrameClass::K));
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    Formula f = sample_formula(FormulaShape{}, testing::kVocab, rng);
    CHECK(equiv(f, f, FrameClass::K));
  }
}

TEST_CASE("budget exhaustion is reported") {
  Prover p(FrameClass::K, 1);
  CHECK_THROWS_AS(p.satisfiable(F("<a>p & <a>q & [a](r | ~p) & <b><a>(p & q)")), ResourceExhausted);
  CHECK_THROWS_AS(valid(F("<a>p & <a>q & [a](r | ~p) & <b><a>(p & q)"), FrameClass::S5, 1), ResourceExhausted);
}

TEST_CASE("validity implies truth on sampled models") {
  Rng rng(21);
  for (const FrameClass c : {FrameClass::K, FrameClass::K45, FrameClass::S5}) {
    int found = 0;
    for (int i = 0; i < 150; ++i) {
      Formula f = sample_formula(FormulaShape{}, testing::kVocab, rng);
      const bool v = valid(f, c);
      if (v) ++found;
      for (int k = 0; k < 10; ++k) {
        PointedKripkeModel m = sample_model(c, 6, testing::kVocab, rng);
        for (std::size_t s = 0; s < m.model.size(); ++s) {
          const bool holds = eval_basic(PointedKripkeModel{m.model, {static_cast<int>(s)}}, f);
          if (v) CHECK(holds);
        }
      }
      // Countermodels returned for invalid formulas are genuine and in class.
      if (!v) {
        auto cm = Prover(c).model(mk_not(f), testing::kVocab.agents);
        REQUIRE(cm.has_value());
        CHECK(frame_class_holds(cm->model, c));
        CHECK(eval_basic(*cm, mk_not(f)));
      }
    }
    MESSAGE(to_string(c) << ": " << found << " valid samples");
  }
}

TEST_CASE("validity is monotone across the classes") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    Formula f = sample_formula(FormulaShape{}, testing::kVocab, rng);
    if (valid(f, FrameClass::K)) CHECK(valid(f, FrameClass::K45));
    if (valid(f, FrameClass::K45)) CHECK(valid(f, FrameClass::S5));
  }
}

TEST_CASE("models of satisfiable formulas") {
  Prover p(FrameClass::S5);
  auto m = p.model(F("<a>p & <a>~p & [b]q"), {"a", "b"});
  REQUIRE(m.has_value());
  CHECK(frame_class_holds(m->model, FrameClass::S5));
  CHECK(eval_basic(*m, F("<a>p & <a>~p & [b]q")));
  CHECK_FALSE(p.model(F("[a]p & ~p"), {"a"}).has_value());
}
