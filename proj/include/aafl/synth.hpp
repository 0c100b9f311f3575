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

#ifndef AAFL_SYNTH_HPP_
#define AAFL_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "aafl/syntax.hpp"

namespace aafl {

// An action that achieves goal wherever the goal is achievable by refinement.
Action synthesize(Formula goal, FrameClass c);

struct SynthesisReport {
  int trials = 0;
  int exists_true = 0;         // models where the goal was achievable
  int attempted = 0;           // executions run
  int succeeded = 0;           // executions with a surviving designated point
  int goal_satisfied = 0;      // successful executions satisfying the goal
  int necessity_failures = 0;  // success without the goal
  int sufficiency_failures = 0;  // goal achievable but not achieved
  std::vector<std::string> counterexamples;  // model JSON per failure

  bool ok() const { return necessity_failures == 0 && sufficiency_failures == 0; }
};

// Samples class-c models over the vocabulary of goal and alpha and checks
// both contracts on each.
SynthesisReport verify_synthesis(Formula goal, Action alpha, FrameClass c, int trials, std::uint64_t seed,
                                 int max_states = 4);

}  // namespace aafl

#endif  // AAFL_SYNTH_HPP_
