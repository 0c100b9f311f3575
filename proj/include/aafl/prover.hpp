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

#ifndef AAFL_PROVER_HPP_
#define AAFL_PROVER_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aafl/common.hpp"
#include "aafl/kripke.hpp"
#include "aafl/syntax.hpp"

namespace aafl {

inline constexpr std::size_t kDefaultProverBudget = 4'000'000;

// Tableau decision procedure for basic formulas over K, K45 and S5.
//
// Worlds are saturated one at a time.  In K45 and S5 the a-successors of a
// world form a cluster that shares the world's a-modal theory; a successor
// that needs an a-modal formula its parent has not decided reports it back,
// and the parent branches on that formula.  Results are cached per
// (label, incoming agent, theory), so a Prover reused across queries gets
// faster.  Every query may throw ResourceExhausted once `budget` expansion
// steps have been spent on it.
class Prover {
 public:
  explicit Prover(FrameClass c, std::size_t budget = kDefaultProverBudget);
  ~Prover();
  Prover(Prover&&) noexcept;
  Prover& operator=(Prover&&) noexcept;

  FrameClass frame_class() const { return class_; }
  void set_budget(std::size_t budget) { budget_ = budget; }

  bool satisfiable(Formula f);
  bool valid(Formula f);
  bool equiv(Formula f, Formula g);
  // A model of the class satisfying f at its single designated state, or
  // nothing when f is unsatisfiable.
  std::optional<PointedKripkeModel> model(Formula f, const AgentSet& agents);

 private:
  struct Impl;
  FrameClass class_;
  std::size_t budget_;
  std::unique_ptr<Impl> impl_;
};

// One-shot helpers; they share a per-thread Prover for each class.
bool valid(Formula f, FrameClass c, std::size_t budget = kDefaultProverBudget);
bool satisfiable(Formula f, FrameClass c, std::size_t budget = kDefaultProverBudget);
bool equiv(Formula f, Formula g, FrameClass c, std::size_t budget = kDefaultProverBudget);

}  // namespace aafl

#endif  // AAFL_PROVER_HPP_
