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

#include "aafl/kripke.hpp"

#include <algorithm>

#include "aafl/bisim.hpp"
#include "aafl/check.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aafl;

namespace {

KripkeModel single(bool loop) {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> rel{{"a", {}}};
  if (loop) rel["a"].push_back({"w", "w"});
  return make_model({"a"}, {"w"}, {{"w", {"p"}}}, rel);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("frame classes") {
  const KripkeModel m0 = testing::grant_model().model;
  CHECK(frame_class_holds(m0, FrameClass::S5));
  CHECK(frame_class_holds(single(false), FrameClass::K45));
  CHECK_FALSE(frame_class_holds(single(false), FrameClass::S5));
  CHECK(frame_class_holds(single(false), FrameClass::K));

  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    CHECK(frame_class_holds(sample_model(FrameClass::S5, 5, testing::kVocab, rng).model, FrameClass::S5));
    CHECK(frame_class_holds(sample_model(FrameClass::K45, 5, testing::kVocab, rng).model, FrameClass::K45));
    KripkeModel m = sample_model(FrameClass::K, 5, testing::kVocab, rng).model;
    if (frame_class_holds(m, FrameClass::S5)) CHECK(frame_class_holds(m, FrameClass::K45));
  }
}

TEST_CASE("closures land in the class") {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    KripkeModel m = sample_model(FrameClass::K, 5, testing::kVocab, rng).model;
    for (const auto& [a, r] : m.relations) {
      CHECK(relation_in_class(close_relation(r, FrameClass::K45), FrameClass::K45));
      CHECK(relation_in_class(close_relation(r, FrameClass::S5), FrameClass::S5));
    }
  }
}

TEST_CASE("validation rejects malformed models") {
  CHECK_THROWS_AS(make_model({"a"}, {"w"}, {{"v", {"p"}}}, {{"a", {}}}), InputError);
  CHECK_THROWS_AS(make_model({"a"}, {"w"}, {}, {{"a", {{"w", "v"}}}}), InputError);
  CHECK_THROWS_AS(make_model({"a"}, {}, {}, {{"a", {}}}), InputError);
  CHECK_THROWS_AS(model_from_json(R"({"agents":["a","b"],"states":["w"],"relations":{"a":[]},"points":["w"]})"),
                  InputError);
  CHECK_THROWS_AS(model_from_json(R"({"agents":["a"],"states":["w"],"relations":{"a":[],"b":[]},"points":["w"]})"),
                  InputError);
  CHECK_THROWS_AS(model_from_json(R"({"agents":["a"],"states":["w"],"valuation":{},"relations":{"a":[]},"points":["w"],"extra":1})"),
                  InputError);
}

TEST_CASE("disjoint union") {
  const PointedKripkeModel m0 = testing::grant_model();
  DisjointUnion u = disjoint_union(m0.model, m0.model);
  CHECK(u.model.size() == 4);
  for (std::size_t s = 0; s < m0.model.size(); ++s) {
    CHECK(u.model.valuation[u.left[s]] == m0.model.valuation[s]);
    CHECK(u.model.valuation[u.right[s]] == m0.model.valuation[s]);
    for (const auto& a : m0.model.agents)
      for (int v : u.model.succ(a, u.left[s]))
        CHECK(std::find(u.left.begin(), u.left.end(), v) != u.left.end());
  }
  for (int s = 0; s < 2; ++s) {
    CHECK(bisimilar(PointedKripkeModel{u.model, {u.left[s]}}, PointedKripkeModel{m0.model, {s}}));
    CHECK(bisimilar(PointedKripkeModel{u.model, {u.right[s]}}, PointedKripkeModel{m0.model, {s}}));
  }
  KripkeModel other = make_model({"x"}, {"w"}, {}, {{"x", {}}});
  CHECK_THROWS_AS(disjoint_union(m0.model, other), InputError);
}

TEST_CASE("DOT export") {
  PointedKripkeModel one = point(single(true), {"w"});
  one.model.states[0] = "w1";
  const std::string dot = export_dot(one);
  CHECK(count(dot, "doublecircle") == 1);
  CHECK(dot.find("\"w1: p\"") != std::string::npos);

  const std::string g = export_dot(testing::grant_model());
  CHECK(count(g, " -> ") == 12);
  CHECK(count(g, "[label=\"w") == 2);
  CHECK(g == export_dot(testing::grant_model()));
}

TEST_CASE("JSON round trip") {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    PointedKripkeModel m = sample_model(FrameClass::K, 5, testing::kVocab, rng);
    const std::string j = model_to_json(m);
    CHECK(model_to_json(model_from_json(j)) == j);
  }
}

TEST_CASE("sampling is deterministic") {
  AgentSet a{"a"};
  std::vector<std::string> p{"p"};
  CHECK(model_to_json(sample_model(FrameClass::S5, 4, a, p, 42)) == model_to_json(sample_model(FrameClass::S5, 4, a, p, 42)));
  CHECK(frame_class_holds(sample_model(FrameClass::S5, 4, a, p, 42).model, FrameClass::S5));
  CHECK(frame_class_holds(sample_model(FrameClass::K45, 5, a, p, 42).model, FrameClass::K45));
}
