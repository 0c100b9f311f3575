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

#include "aafl/syntax.hpp"

#include "aafl/check.hpp"
#include "aafl/prover.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;
using aafl::testing::A;
using aafl::testing::F;

TEST_CASE("parse builds the expected trees") {
  Formula f = parse_formula("p & [a]q", {"a"});
  CHECK(f == conj(atom("p"), box("a", atom("q"))));

  Formula g = parse_formula("[L{ed}(?p)] [ed] p", {"ed", "james", "tim"});
  Action l = learn({"ed"}, test(atom("p")), test(atom("p")));
  CHECK(g == dyn_box(l, box("ed", atom("p"))));

  CHECK_THROWS_AS(parse_formula("[zz] p", {"a"}), ParseError);
  CHECK_THROWS_AS(parse_formula("p &", {"a"}), ParseError);
  CHECK_THROWS_AS(parse_action("L{zz}(?p)", {"a"}), InputError);
}

TEST_CASE("precedence and associativity") {
  CHECK(F("p | q & r") == disj(atom("p"), conj(atom("q"), atom("r"))));
  CHECK(F("p -> q -> r") == implies(atom("p"), implies(atom("q"), atom("r"))));
  CHECK(F("~[a]p & q") == conj(neg(box("a", atom("p"))), atom("q")));
  CHECK(F("p <-> q -> r") == iff(atom("p"), implies(atom("q"), atom("r"))));
  CHECK(A("?p ; ?q + ?r") == choice(compose(test(atom("p")), test(atom("q"))), test(atom("r"))));
  CHECK(F("<*> p") == ref_diamond(atom("p")));
  CHECK(F("[*] p") == ref_box(atom("p")));
}

TEST_CASE("printer output and round trips") {
  CHECK(print_formula(atom("p")) == "p");
  CHECK(print_formula(box("a", neg(atom("p")))) == "[a] ~p");
  CHECK(print_action(learn({"ed"}, test(atom("p")), test(atom("p")))) == "L{ed}(?p)");

  Rng rng(7);
  FormulaShape shape;
  shape.depth = 3;
  shape.max_dynamic = 2;
  shape.max_refinement = 1;
  shape.cover = true;
  for (int i = 0; i < 300; ++i) {
    Formula f = sample_formula(shape, testing::kVocab, rng);
    CHECK(parse_formula(print_formula(f), testing::kVocab.agents) == f);
    Action a = sample_action(shape, testing::kVocab, rng);
    CHECK(parse_action(print_action(a), testing::kVocab.agents) == a);
  }
}

TEST_CASE("modal depth") {
  CHECK(modal_depth(F("p")) == 0);
  CHECK(modal_depth(F("[a] p")) == 1);
  CHECK(modal_depth(F("<a> (p & [b] q)")) == 2);
  CHECK(modal_depth(cover("a", {})) == 1);
  CHECK(modal_depth(cover("a", {F("[b] p"), F("q")})) == 2);
  CHECK_THROWS_AS(modal_depth(F("[?p] p")), InputError);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Formula f = sample_formula(FormulaShape{}, testing::kVocab, rng);
    CHECK(modal_depth(f) <= 2);
  }
}

TEST_CASE("cover expansion") {
  CHECK(expand_cover("a", {atom("p")}) == conj(box("a", atom("p")), diamond("a", atom("p"))));
  CHECK(equiv(expand_cover("a", {}), box("a", bottom()), FrameClass::K));
  CHECK(equiv(expand_cover("a", {atom("p"), top()}), diamond("a", atom("p")), FrameClass::K));
  for (int d = 0; d < 3; ++d) {
    std::vector<Formula> gamma{sample_formula(d, testing::kVocab, 11 + d), atom("q")};
    int inner = 0;
    for (Formula g : gamma) inner = std::max(inner, modal_depth(g));
    CHECK(modal_depth(expand_cover("a", gamma)) == 1 + inner);
  }
}

TEST_CASE("B-restricted formulae") {
  CHECK(is_b_restricted(F("[a] p"), {"a"}));
  CHECK_FALSE(is_b_restricted(F("[b] p"), {"a"}));
  CHECK(is_b_restricted(F("p & [a] [b] p"), {"a"}));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) CHECK(is_b_restricted(sample_formula(FormulaShape{}, testing::kVocab, rng), {"a", "b"}));
}

TEST_CASE("subformulae") {
  CHECK(subformulae(F("p")) == FormulaSet{F("p")});
  CHECK(subformulae(F("[a] p")) == FormulaSet{F("[a] p"), F("p")});
  CHECK(subformulae(F("p & q")) == FormulaSet{F("p & q"), F("p"), F("q")});
}

TEST_CASE("basic and propositional classification") {
  CHECK(is_propositional(F("p -> ~q")));
  CHECK_FALSE(is_propositional(F("[a] p")));
  CHECK(is_basic(F("[a] p")));
  CHECK(is_basic(cover("a", {F("p")})));
  CHECK_FALSE(is_basic(F("[?p] p")));
  CHECK_FALSE(is_basic(F("<*> p")));
  CHECK(is_basic(A("L{a}(?p, ?[b]q)")));
  CHECK_FALSE(is_basic(A("?[?p] q")));
}
