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

#include "aafl/correspond.hpp"

#include <map>
#include <utility>

namespace aafl {

namespace {

class Builder {
 public:
  Builder(const ActionModel& a, FrameClass c) : a_(a), c_(c) {}

  Action at(int s, int n) {
    auto key = std::make_pair(s, n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Action r = test(a_.pre[s]);
    if (n > 0 && c_ == FrameClass::S5) {
      // Nested learning: each agent's class is fixed at the level where it is
      // the learner, and the innermost root is the shallower construction.
      r = at(s, n - 1);
      for (auto ag = a_.agents.rbegin(); ag != a_.agents.rend(); ++ag) r = learn({*ag}, r, options(*ag, s, n));
    } else if (n > 0) {
      std::vector<Action> steps{r};
      for (const auto& ag : a_.agents) steps.push_back(learn({ag}, options(ag, s, n)));
      r = compose_all(steps);
    }
    memo_.emplace(key, r);
    return r;
  }

 private:
  // No successors: learning an unexecutable test leaves the agent with none.
  Action options(const std::string& ag, int s, int n) {
    std::vector<Action> out;
    for (int t : a_.succ(ag, s)) out.push_back(at(t, n - 1));
    return out.empty() ? test(bottom()) : choice_all(out);
  }

  const ActionModel& a_;
  FrameClass c_;
  std::map<std::pair<int, int>, Action> memo_;
};

void check_input(const ActionModel& a, FrameClass c) {
  a.validate();
  for (Formula p : a.pre)
    if (!is_basic(p)) throw InputError("correspondence needs basic preconditions");
  if (!am_frame_class_holds(a, c)) throw InputError("action model is not in class " + to_string(c));
}

}  // namespace

Action correspond(const ActionModel& a, int point, int n, FrameClass c) {
  if (n < 0) throw InputError("correspondence depth must be non-negative");
  if (point < 0 || point >= static_cast<int>(a.size())) throw InputError("unknown action point");
  check_input(a, c);
  return Builder(a, c).at(point, n);
}

Action correspond(const PointedActionModel& a, int n, FrameClass c) {
  if (a.designated.size() != 1) throw InputError("correspondence expects a single designated point");
  return correspond(a.model, a.designated.front(), n, c);
}

Action correspond_multi(const PointedActionModel& a, int n, FrameClass c) {
  if (n < 0) throw InputError("correspondence depth must be non-negative");
  check_input(a.model, c);
  Builder b(a.model, c);
  std::vector<Action> options;
  for (int s : a.designated) options.push_back(b.at(s, n));
  return choice_all(options);
}

}  // namespace aafl
