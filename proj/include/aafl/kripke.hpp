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

#ifndef AAFL_KRIPKE_HPP_
#define AAFL_KRIPKE_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aafl/common.hpp"

namespace aafl {

// Successor lists indexed by state; each list sorted and duplicate-free.
using Relation = std::vector<std::vector<int>>;

struct KripkeModel {
  AgentSet agents;
  std::vector<std::string> states;
  std::vector<std::set<std::string>> valuation;  // indexed like states
  std::map<std::string, Relation> relations;     // one entry per agent

  std::size_t size() const { return states.size(); }
  // -1 when absent.
  int index_of(std::string_view state) const;
  const std::vector<int>& succ(const std::string& agent, int s) const;
  // Throws InputError when the invariants do not hold.
  void validate() const;
};

struct PointedKripkeModel {
  KripkeModel model;
  std::vector<int> designated;  // sorted state indices
};

// Builds a model from named pairs; unknown names raise InputError.
KripkeModel make_model(const AgentSet& agents, const std::vector<std::string>& states,
                       const std::map<std::string, std::set<std::string>>& valuation,
                       const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& relations);
PointedKripkeModel point(KripkeModel m, const std::vector<std::string>& designated);

bool relation_in_class(const Relation& r, FrameClass c);
bool frame_class_holds(const KripkeModel& m, FrameClass c);

// Smallest relation containing r that is in class c (S5: equivalence closure;
// K45: transitive and Euclidean closure).
Relation close_relation(const Relation& r, FrameClass c);

struct DisjointUnion {
  KripkeModel model;
  std::vector<int> left;   // state of m1 -> state of the union
  std::vector<int> right;  // state of m2 -> state of the union
};
DisjointUnion disjoint_union(const KripkeModel& m1, const KripkeModel& m2);

std::string export_dot(const PointedKripkeModel& m);

std::string model_to_json(const PointedKripkeModel& m);
PointedKripkeModel model_from_json(std::string_view text);

}  // namespace aafl

#endif  // AAFL_KRIPKE_HPP_
