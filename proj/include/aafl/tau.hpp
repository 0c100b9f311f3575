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

#ifndef AAFL_TAU_HPP_
#define AAFL_TAU_HPP_

#include "aafl/action.hpp"
#include "aafl/syntax.hpp"

namespace aafl {

// Pointed action model of an action formula in class c.  `agents` is the
// vocabulary the model is built over and must contain every agent of a.
// The literal translation. With minimal set, products keep only pairs
// reachable from the designated points and every non-test node is replaced by
// its bisimulation quotient; executions stay bisimilar at the designated points.
PointedActionModel tau(Action a, FrameClass c, const AgentSet& agents, bool minimal = false);

}  // namespace aafl

#endif  // AAFL_TAU_HPP_
