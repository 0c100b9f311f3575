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

#ifndef AAFL_CORRESPOND_HPP_
#define AAFL_CORRESPOND_HPP_

#include "aafl/action.hpp"
#include "aafl/syntax.hpp"

namespace aafl {

// An action formula whose translation is n-bisimilar to (a, point).
Action correspond(const ActionModel& a, int point, int n, FrameClass c);
// Single designated point required.
Action correspond(const PointedActionModel& a, int n, FrameClass c);
// Choice over the designated points.
Action correspond_multi(const PointedActionModel& a, int n, FrameClass c);

}  // namespace aafl

#endif  // AAFL_CORRESPOND_HPP_
