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

#ifndef AAFL_ACTION_HPP_
#define AAFL_ACTION_HPP_

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aafl/kripke.hpp"
#include "aafl/syntax.hpp"

namespace aafl {

struct ActionModel {
  AgentSet agents;
  std::vector<std::string> points;
  std::vector<Formula> pre;                  // indexed like points
  std::map<std::string, Relation> relations;  // one entry per agent

  std::size_t size() const { return points.size(); }
  int index_of(std::string_view point) const;
  const std::vector<int>& succ(const std::string& agent, int t) const;
  void validate() const;
};

struct PointedActionModel {
  ActionModel model;
  std::vector<int> designated;  // sorted, non-empty
};

// Decides whether a precondition holds at a state of the model being updated.
using SatOracle = std::function<bool(int state, Formula pre)>;

// Returns a basic formula equivalent to <A, point> post.
using Normalizer = std::function<Formula(const PointedActionModel& a, int point, Formula post)>;

// Product update.  The designated set of the result may be empty, which
// callers read as a failed execution.  When `origin` is given it receives the
// (state, point) pair behind every result state.  With reachable_only the
// result is the submodel generated by the designated pairs.
PointedKripkeModel execute(const PointedKripkeModel& m, const PointedActionModel& a, const SatOracle& sat,
                           std::vector<std::pair<int, int>>* origin = nullptr, bool reachable_only = false);

// With reachable_only the product keeps just the pairs reachable from the
// designated pairs; the full product is the textbook construction.
PointedActionModel seq_compose(const PointedActionModel& a, const PointedActionModel& b, const Normalizer& normalize,
                               bool reachable_only = false);

// Disjoint union; points of both operands get "#1"/"#2" suffixes when the
// two name sets overlap.
PointedActionModel choice_union(const PointedActionModel& a, const PointedActionModel& b);

// Bisimulation quotient with syntactically equal preconditions as colours.
// Executions through the quotient are bisimilar to executions through a.
PointedActionModel quotient(const PointedActionModel& a);

bool am_frame_class_holds(const ActionModel& a, FrameClass c);

PointedActionModel action_model_from_json(std::string_view text);
std::string action_model_to_json(const PointedActionModel& a);
std::string export_dot(const PointedActionModel& a);

}  // namespace aafl

#endif  // AAFL_ACTION_HPP_
