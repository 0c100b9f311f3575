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

// Fixtures shared by the unit tests and the acceptance run.

#ifndef AAFL_TESTS_SUPPORT_HPP_
#define AAFL_TESTS_SUPPORT_HPP_

#include <string>

#include "aafl/check.hpp"
#include "aafl/kripke.hpp"
#include "aafl/syntax.hpp"

namespace aafl::testing {

inline const AgentSet kGrantAgents{"ed", "james", "tim"};

// Two worlds, p only at w1, every relation universal.
inline PointedKripkeModel grant_model(const std::string& at = "w1") {
  std::vector<std::pair<std::string, std::string>> all{{"w1", "w1"}, {"w1", "w2"}, {"w2", "w1"}, {"w2", "w2"}};
  KripkeModel m = make_model(kGrantAgents, {"w1", "w2"}, {{"w1", {"p"}}}, {{"ed", all}, {"james", all}, {"tim", all}});
  return point(m, {at});
}

inline const char* const kGrantAction =
    "L{ed}(?p) ; L{james}(L{ed}(?p) + L{ed}(?~p) + L{tim}(?p) + L{tim}(?~p)) ; "
    "L{tim}((?~p ; L{james}(?~p)) + ?true)";

inline Formula F(const std::string& text, const AgentSet& agents = {"a", "b"}) { return parse_formula(text, agents); }
inline Action A(const std::string& text, const AgentSet& agents = {"a", "b"}) { return parse_action(text, agents); }

inline const Vocabulary kVocab{{"a", "b"}, {"p", "q"}};

}  // namespace aafl::testing

#endif  // AAFL_TESTS_SUPPORT_HPP_
