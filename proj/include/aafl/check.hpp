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

#ifndef AAFL_CHECK_HPP_
#define AAFL_CHECK_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "aafl/action.hpp"
#include "aafl/kripke.hpp"
#include "aafl/syntax.hpp"

namespace aafl {

// Truth sets of basic formulas over one model, cached per formula.
class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& m) : m_(m) {}
  const std::vector<char>& truth(Formula f);
  bool at(int state, Formula f) { return truth(f)[state] != 0; }

 private:
  const KripkeModel& m_;
  std::unordered_map<Formula, std::vector<char>, FormulaHash> memo_;
};

// Throws InputError when f is not basic or mentions an undeclared agent.
bool eval_basic(const PointedKripkeModel& m, Formula f);

// Full-language checker.  Dynamic operators execute the translated action
// model; refinement quantifiers are rewritten by reduce first.
class Checker {
 public:
  Checker(const KripkeModel& m, FrameClass c) : m_(m), class_(c) {}
  const std::vector<char>& truth(Formula f);

 private:
  const KripkeModel& m_;
  FrameClass class_;
  std::unordered_map<Formula, std::vector<char>, FormulaHash> memo_;
};

// Throws InputError when the model is outside class c.
bool check(const PointedKripkeModel& m, Formula f, FrameClass c);
bool check_via_reduction(const PointedKripkeModel& m, Formula f, FrameClass c);

// ---- random instances ----------------------------------------------------

struct Vocabulary {
  AgentSet agents;
  std::vector<std::string> atoms;
};

struct FormulaShape {
  int depth = 2;             // bound on nesting of modal, dynamic and refinement operators
  int max_dynamic = 0;       // dynamic operators per formula
  int max_refinement = 0;    // refinement quantifiers per formula
  int action_depth = 1;      // nesting of choice/compose/learn inside actions
  int test_depth = 1;        // modal depth of test formulas
  bool cover = false;        // allow Cov{a}(...)
  int max_binary = 6;        // &, | and -> per formula (tests count separately)
};

using Rng = std::mt19937_64;

PointedKripkeModel sample_model(FrameClass c, int max_states, const AgentSet& agents,
                                const std::vector<std::string>& atoms, std::uint64_t seed);
PointedKripkeModel sample_model(FrameClass c, int max_states, const Vocabulary& v, Rng& rng);

Formula sample_formula(const FormulaShape& shape, const Vocabulary& v, Rng& rng);
Formula sample_formula(int depth, const Vocabulary& v, std::uint64_t seed);
Action sample_action(const FormulaShape& shape, const Vocabulary& v, Rng& rng);
Action sample_action(int depth, const Vocabulary& v, std::uint64_t seed);

// Random action model whose relations lie in class c.
PointedActionModel sample_action_model(FrameClass c, int max_points, const Vocabulary& v, int pre_depth, Rng& rng);

}  // namespace aafl

#endif  // AAFL_CHECK_HPP_
