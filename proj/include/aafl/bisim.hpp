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

#ifndef AAFL_BISIM_HPP_
#define AAFL_BISIM_HPP_

#include "aafl/action.hpp"
#include "aafl/kripke.hpp"

namespace aafl {

// Multi-pointed arguments compare as sets: every designated point of one side
// needs a related designated point on the other side.
bool bisimilar(const PointedKripkeModel& m1, const PointedKripkeModel& m2);
bool n_bisimilar(const PointedKripkeModel& m1, const PointedKripkeModel& m2, int n);
bool b_bisimilar(const PointedKripkeModel& m1, const PointedKripkeModel& m2, const AgentSet& b);

// m1 is a refinement of m2: a simulation from m1 into m2 relates the points.
bool refines(const PointedKripkeModel& m1, const PointedKripkeModel& m2);

bool am_bisimilar(const PointedActionModel& a1, const PointedActionModel& a2, FrameClass c);
bool am_n_bisimilar(const PointedActionModel& a1, const PointedActionModel& a2, int n, FrameClass c);

}  // namespace aafl

#endif  // AAFL_BISIM_HPP_
