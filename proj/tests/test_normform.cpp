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

#include "aafl/normform.hpp"

#include "aafl/check.hpp"
#include "aafl/prover.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;
using aafl::testing::F;

namespace {

// No cover of agent a at the top level of any a-cover member, recursively.
bool alternates(Formula f, const std::string& inside) {
  if (f.op() == Op::Cover) {
    if (f.name() == inside) return false;
    for (Formula g : f.kids())
      if (!alternates(g, f.name())) return false;
    return true;
  }
  if (f.op() == Op::Box || f.op() == Op::Diamond) return false;
  for (Formula g : f.kids())
    if (!alternates(g, inside)) return false;
  return true;
}

bool dnf_shaped(Formula f) {
  if (f.op() == Op::Box || f.op() == Op::Diamond) return false;
  for (Formula g : f.kids())
    if (!dnf_shaped(g)) return false;
  return true;
}

Formula witness_cover(const S5Witness& w) {
  std::vector<Formula> parts{w.pi, w.gamma0};
  for (const auto& [a, needs] : w.needs) parts.push_back(expand_cover(a, needs));
  return conj_all(parts);
}

}  // namespace

TEST_CASE("DNF examples") {
  auto d = to_dnf(F("<a> p"));
  REQUIRE(d->clauses.size() == 1);
  const auto& gamma = d->clauses[0].covers.at("a");
  CHECK(gamma.size() == 2);
  CHECK(equiv(cover("a", gamma), cover("a", {F("p"), top()}), FrameClass::K));

  auto b = to_dnf(F("[a] p"));
  REQUIRE(b->clauses.size() == 2);
  std::set<std::size_t> sizes;
  for (const auto& c : b->clauses) sizes.insert(c.covers.at("a").size());
  CHECK(sizes == std::set<std::size_t>{0, 1});

  auto p = to_dnf(F("p"));
  REQUIRE(p->clauses.size() == 1);
  CHECK(p->clauses[0].pi == F("p"));
  CHECK(p->clauses[0].covers.empty());

  CHECK(to_dnf(F("p & ~p"))->clauses.empty());
}

TEST_CASE("normal forms preserve meaning") {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    Formula f = sample_formula(FormulaShape{}, testing::kVocab, rng);
    Formula d = to_formula(*to_dnf(f));
    CHECK(equiv(f, d, FrameClass::K));
    CHECK(dnf_shaped(d));
    Formula a = to_formula(*to_adnf(f), true);
    CHECK(equiv(f, a, FrameClass::K45));
    CHECK(alternates(a, ""));
    CHECK(is_alternating(a));
  }
}

TEST_CASE("alternating DNF examples") {
  Formula a = to_formula(*to_adnf(F("<a> <a> p")), true);
  CHECK(equiv(a, F("<a> <a> p"), FrameClass::K45));
  CHECK(alternates(a, ""));
  CHECK(equiv(to_formula(*to_adnf(F("p")), true), F("p"), FrameClass::K45));
  Formula b = to_formula(*to_adnf(F("[a] p")), true);
  CHECK(equiv(b, F("[a] p"), FrameClass::K45));
  CHECK(alternates(b, ""));
}

TEST_CASE("K45 flattening") {
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    Formula f = sample_formula(FormulaShape{}, testing::kVocab, rng);
    CHECK(equiv(f, flatten_k45(f), FrameClass::K45));
  }
}

TEST_CASE("explicit formulae") {
  CHECK(to_explicit(bottom()).empty());

  auto e = to_explicit(F("[a] p & p"));
  REQUIRE_FALSE(e.empty());
  for (const auto& x : e) {
    CHECK(is_explicit(x));
    CHECK(valid(mk_implies(x.gamma0, F("p")), FrameClass::S5));
    for (Formula g : x.covers.at("a")) CHECK(valid(mk_implies(g, F("p")), FrameClass::S5));
  }

  ExplicitFormula trivial{F("p"), top(), {{"a", {top()}}}};
  CHECK(is_explicit(trivial));
  CHECK(is_explicit(to_formula(trivial)));
  ExplicitFormula undecided{top(), F("p"), {{"a", {F("p"), F("q")}}}};
  CHECK_FALSE(is_explicit(undecided));
  CHECK_THROWS_AS(is_explicit(ExplicitFormula{top(), F("p"), {{"a", {F("q")}}}}), InputError);
}

TEST_CASE("explicit conversion preserves meaning and is idempotent") {
  Rng rng(53);
  FormulaShape small;
  small.depth = 1;
  int converted = 0;
  for (int i = 0; i < 60; ++i) {
    Formula f = sample_formula(small, testing::kVocab, rng);
    std::vector<ExplicitFormula> e;
    try {
      e = to_explicit(f);
    } catch (const NotConverted&) {
      continue;
    }
    ++converted;
    std::vector<Formula> parts;
    for (const auto& x : e) {
      CHECK(is_explicit(x));
      parts.push_back(to_formula(x));
    }
    Formula whole = disj_all(parts);
    CHECK(equiv(f, whole, FrameClass::S5));
    std::vector<ExplicitFormula> again;
    CHECK_NOTHROW(again = to_explicit(whole));
    std::vector<Formula> again_parts;
    for (const auto& x : again) again_parts.push_back(to_formula(x));
    CHECK(disj_all(again_parts) == whole);
  }
  CHECK(converted > 30);
}

TEST_CASE("S5 witnesses bracket the formula") {
  // Each witness, read as covers, implies f; f implies some witness read
  // with diamonds only.
  Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    Formula f = sample_formula(FormulaShape{}, testing::kVocab, rng);
    std::vector<Formula> loose;
    for (const auto& w : s5_witnesses(f)) {
      CHECK(valid(mk_implies(witness_cover(w), f), FrameClass::S5));
      std::vector<Formula> parts{w.pi, w.gamma0};
      for (const auto& [a, needs] : w.needs) {
        REQUIRE_FALSE(needs.empty());
        CHECK(needs[0] == w.gamma0);
        for (Formula nu : needs) parts.push_back(mk_diamond(a, nu));
      }
      loose.push_back(conj_all(parts));
    }
    CHECK(valid(mk_implies(f, disj_all(loose)), FrameClass::S5));
  }
}
