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

#include "aafl/tau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "aafl/reduce.hpp"

namespace aafl {

namespace {

void sort_relations(ActionModel& m) {
  for (auto& [a, r] : m.relations)
    for (auto& succ : r) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
}

int add_point(ActionModel& m, const std::string& name, Formula pre) {
  m.points.push_back(name);
  m.pre.push_back(pre);
  for (auto& [a, r] : m.relations) r.emplace_back();
  return static_cast<int>(m.points.size()) - 1;
}

const char* label(Action a) {
  switch (a.op()) {
    case ActOp::Test: return "test";
    case ActOp::Choice: return "choice";
    case ActOp::Compose: return "seq";
    case ActOp::Learn: return "L";
  }
  return "";
}

std::string child_path(const std::string& path, int i, Action child) {
  return path + "." + std::to_string(i) + "." + label(child);
}

class Builder {
 public:
  Builder(FrameClass c, const AgentSet& agents, bool minimal) : c_(c), agents_(agents), minimal_(minimal) {}

  PointedActionModel build(Action a, const std::string& path) {
    if (!minimal_) return build_node(a, path);
    // Minimal mode shares translations of repeated subterms.
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    PointedActionModel r = build_node(a, path);
    if (a.op() != ActOp::Test) r = quotient(r);
    memo_.emplace(a, r);
    return r;
  }

 private:
  PointedActionModel build_node(Action a, const std::string& path) {
    switch (a.op()) {
      case ActOp::Test: return test_model(a.test(), path);
      case ActOp::Choice:
        return choice_union(build(a.kid(0), child_path(path, 0, a.kid(0))), build(a.kid(1), child_path(path, 1, a.kid(1))));
      case ActOp::Compose:
        return seq_compose(build(a.kid(0), child_path(path, 0, a.kid(0))), build(a.kid(1), child_path(path, 1, a.kid(1))),
                           reducing_normalizer(c_), minimal_);
      case ActOp::Learn:
        return c_ == FrameClass::S5 ? learn_s5(a, path) : learn_k(a, path);
    }
    throw Error("internal: unknown action node");
  }

  ActionModel empty() const {
    ActionModel m;
    m.agents = agents_;
    for (const auto& a : agents_) m.relations[a] = {};
    return m;
  }

  PointedActionModel test_model(Formula phi, const std::string& path) {
    PointedActionModel out{empty(), {}};
    ActionModel& m = out.model;
    int t = add_point(m, "t@" + path, phi);
    int skip = add_point(m, "skip@" + path, top());
    for (auto& [a, r] : m.relations) {
      if (c_ == FrameClass::S5) {
        r[t] = {t, skip};
        r[skip] = {t, skip};
      } else {
        r[t] = {skip};
        r[skip] = {skip};
      }
    }
    out.designated = {t};
    return out;
  }

  // The learned action: one copy when both operands agree, otherwise their
  // disjoint union.
  PointedActionModel learned(Action a, const std::string& path) {
    PointedActionModel d = build(a.kid(0), child_path(path, 0, a.kid(0)));
    if (a.kid(0) == a.kid(1)) return d;
    return choice_union(d, build(a.kid(1), child_path(path, 1, a.kid(1))));
  }

  PointedActionModel learn_k(Action a, const std::string& path) {
    PointedActionModel d = learned(a, path);
    ActionModel m = d.model;
    const AgentSet& b = a.agents();
    int t = add_point(m, "t@" + path, top());
    int skip = add_point(m, "skip@" + path, top());
    std::vector<int> targets = d.designated;
    if (c_ == FrameClass::K45) {
      targets.clear();
      for (int x : d.designated) targets.push_back(add_point(m, "proxy(" + d.model.points[x] + ")@" + path, d.model.pre[x]));
    }
    for (auto& [ag, r] : m.relations) {
      r[skip] = {skip};
      if (b.count(ag)) {
        r[t] = targets;
        if (c_ == FrameClass::K45)
          for (int p : targets) r[p] = targets;
      } else {
        r[t] = {skip};
        if (c_ == FrameClass::K45)
          for (std::size_t i = 0; i < targets.size(); ++i) r[targets[i]] = d.model.relations.at(ag)[d.designated[i]];
      }
    }
    sort_relations(m);
    return PointedActionModel{std::move(m), {t}};
  }

  PointedActionModel learn_s5(Action a, const std::string& path) {
    PointedActionModel first = build(a.kid(0), child_path(path, 0, a.kid(0)));
    const std::size_t n_first = first.designated.size();
    PointedActionModel d =
        a.kid(0) == a.kid(1) ? first : choice_union(first, build(a.kid(1), child_path(path, 1, a.kid(1))));
    ActionModel m = d.model;
    const AgentSet& b = a.agents();
    const int n = static_cast<int>(m.size());
    std::vector<int> proxies;
    for (int x : d.designated) proxies.push_back(add_point(m, "proxy(" + d.model.points[x] + ")@" + path, d.model.pre[x]));

    for (auto& [ag, r] : m.relations) {
      if (b.count(ag)) {
        for (int p : proxies) r[p] = proxies;
        continue;
      }
      // Join every proxy with its original's class and close under
      // equivalence, which keeps the relation transitive even when several
      // designated points share a class.
      std::vector<int> parent(m.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      for (int u = 0; u < n; ++u)
        for (int v : r[u]) parent[find(u)] = find(v);
      for (std::size_t i = 0; i < proxies.size(); ++i) parent[find(proxies[i])] = find(d.designated[i]);
      std::map<int, std::vector<int>> classes;
      for (int u = 0; u < static_cast<int>(m.size()); ++u) classes[find(u)].push_back(u);
      for (int u = 0; u < static_cast<int>(m.size()); ++u) r[u] = classes[find(u)];
    }
    sort_relations(m);
    std::vector<int> designated(proxies.begin(), proxies.begin() + static_cast<std::ptrdiff_t>(n_first));
    return PointedActionModel{std::move(m), designated};
  }

  FrameClass c_;
  const AgentSet& agents_;
  bool minimal_;
  std::unordered_map<Action, PointedActionModel, ActionHash> memo_;
};

}  // namespace

PointedActionModel tau(Action a, FrameClass c, const AgentSet& agents, bool minimal) {
  for (const auto& ag : agents_of(a))
    if (!agents.count(ag)) throw InputError("action mentions agent '" + ag + "' outside the vocabulary");
  Builder b(c, agents, minimal);
  return b.build(a, label(a));
}

}  // namespace aafl
