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

#include "aafl/action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "model_json.hpp"

namespace aafl {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string pair_name(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

// Product of two relations over index pairs (i, j) -> i * n2 + j, restricted
// to the surviving pairs listed in `index` (-1 for dropped pairs).
Relation product_relation(const Relation& r1, const Relation& r2, const std::vector<int>& index,
                          const std::vector<std::pair<int, int>>& pairs) {
  const std::size_t n2 = r2.size();
  Relation out(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [s, t] = pairs[k];
    for (int u : r1[s])
      for (int v : r2[t]) {
        int j = index[static_cast<std::size_t>(u) * n2 + static_cast<std::size_t>(v)];
        if (j >= 0) out[k].push_back(j);
      }
    out[k] = sorted_unique(std::move(out[k]));
  }
  return out;
}

}  // namespace

int ActionModel::index_of(std::string_view point) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == point) return static_cast<int>(i);
  return -1;
}

const std::vector<int>& ActionModel::succ(const std::string& agent, int t) const {
  auto it = relations.find(agent);
  if (it == relations.end()) throw InputError("unknown agent '" + agent + "'");
  return it->second[t];
}

void ActionModel::validate() const {
  if (points.empty()) throw InputError("an action model needs at least one point");
  if (agents.empty()) throw InputError("an action model needs at least one agent");
  std::set<std::string> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw InputError("duplicate action point names");
  if (pre.size() != points.size()) throw InputError("preconditions must cover every point");
  for (Formula f : pre)
    if (!f.valid()) throw InputError("missing precondition");
  if (relations.size() != agents.size()) throw InputError("relations must be given for exactly the declared agents");
  for (const auto& [a, r] : relations) {
    if (!agents.count(a)) throw InputError("relation for undeclared agent '" + a + "'");
    if (r.size() != points.size()) throw InputError("relation for '" + a + "' has the wrong size");
    for (const auto& succ : r)
      for (int v : succ)
        if (v < 0 || static_cast<std::size_t>(v) >= points.size()) throw InputError("relation endpoint out of range");
  }
}

PointedKripkeModel execute(const PointedKripkeModel& pm, const PointedActionModel& pa, const SatOracle& sat,
                           std::vector<std::pair<int, int>>* origin, bool reachable_only) {
  const KripkeModel& m = pm.model;
  const ActionModel& a = pa.model;
  if (m.agents != a.agents) throw InputError("agent sets of model and action model differ");
  const std::size_t n1 = m.size(), n2 = a.size();

  std::vector<int> index(n1 * n2, -1);
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::unordered_map<Formula, bool, FormulaHash>> cache(n1);
  auto holds = [&](std::size_t s, std::size_t t) {
    Formula p = a.pre[t];
    auto it = cache[s].find(p);
    return it != cache[s].end() ? it->second : (cache[s][p] = sat(static_cast<int>(s), p));
  };
  auto add = [&](std::size_t s, std::size_t t) {
    index[s * n2 + t] = static_cast<int>(pairs.size());
    pairs.emplace_back(static_cast<int>(s), static_cast<int>(t));
  };
  if (reachable_only) {
    std::vector<char> seen(n1 * n2, 0);
    auto visit = [&](std::size_t s, std::size_t t) {
      if (seen[s * n2 + t]) return;
      seen[s * n2 + t] = 1;
      if (holds(s, t)) add(s, t);
    };
    for (int s : pm.designated)
      for (int t : pa.designated) visit(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [s, t] = pairs[k];
      for (const auto& ag : m.agents)
        for (int u : m.relations.at(ag)[s])
          for (int v : a.relations.at(ag)[t]) visit(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
  } else {
    for (std::size_t s = 0; s < n1; ++s)
      for (std::size_t t = 0; t < n2; ++t)
        if (holds(s, t)) add(s, t);
  }

  PointedKripkeModel out;
  KripkeModel& r = out.model;
  r.agents = m.agents;
  for (auto [s, t] : pairs) {
    r.states.push_back(pair_name(m.states[s], a.points[t]));
    r.valuation.push_back(m.valuation[s]);
  }
  for (const auto& ag : m.agents) r.relations[ag] = product_relation(m.relations.at(ag), a.relations.at(ag), index, pairs);
  for (int s : pm.designated)
    for (int t : pa.designated) {
      int j = index[static_cast<std::size_t>(s) * n2 + static_cast<std::size_t>(t)];
      if (j >= 0) out.designated.push_back(j);
    }
  out.designated = sorted_unique(std::move(out.designated));
  if (origin) *origin = std::move(pairs);
  return out;
}

PointedActionModel seq_compose(const PointedActionModel& pa, const PointedActionModel& pb, const Normalizer& normalize,
                               bool reachable_only) {
  const ActionModel& a = pa.model;
  const ActionModel& b = pb.model;
  if (a.agents != b.agents) throw InputError("agent sets of composed action models differ");
  const std::size_t n2 = b.size();
  const std::size_t total = a.size() * n2;
  std::vector<char> keep(total, reachable_only ? 0 : 1);
  if (reachable_only) {
    std::vector<std::size_t> stack;
    for (int s : pa.designated)
      for (int t : pb.designated) stack.push_back(static_cast<std::size_t>(s) * n2 + static_cast<std::size_t>(t));
    while (!stack.empty()) {
      std::size_t k = stack.back();
      stack.pop_back();
      if (keep[k]) continue;
      keep[k] = 1;
      const int s = static_cast<int>(k / n2), t = static_cast<int>(k % n2);
      for (const auto& ag : a.agents)
        for (int s2 : a.relations.at(ag)[s])
          for (int t2 : b.relations.at(ag)[t]) {
            std::size_t k2 = static_cast<std::size_t>(s2) * n2 + static_cast<std::size_t>(t2);
            if (!keep[k2]) stack.push_back(k2);
          }
    }
  }
  std::vector<int> index(total, -1);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < total; ++k)
    if (keep[k]) {
      index[k] = static_cast<int>(pairs.size());
      pairs.emplace_back(static_cast<int>(k / n2), static_cast<int>(k % n2));
    }

  PointedActionModel out;
  ActionModel& r = out.model;
  r.agents = a.agents;
  for (auto [s, t] : pairs) {
    r.points.push_back(pair_name(a.points[s], b.points[t]));
    r.pre.push_back(normalize(pa, s, b.pre[t]));
  }
  for (const auto& ag : a.agents) r.relations[ag] = product_relation(a.relations.at(ag), b.relations.at(ag), index, pairs);
  for (int s : pa.designated)
    for (int t : pb.designated) out.designated.push_back(index[static_cast<std::size_t>(s) * n2 + static_cast<std::size_t>(t)]);
  out.designated = sorted_unique(std::move(out.designated));
  return out;
}

PointedActionModel quotient(const PointedActionModel& pa) {
  const ActionModel& a = pa.model;
  const std::size_t n = a.size();
  // Colours are syntactically identical preconditions; refine to a fixpoint.
  std::vector<int> block(n);
  {
    std::map<std::uint64_t, int> ids;
    for (std::size_t s = 0; s < n; ++s) block[s] = ids.emplace(a.pre[s].id(), static_cast<int>(ids.size())).first->second;
  }
  for (std::size_t count = 0;;) {
    std::map<std::pair<int, std::vector<std::vector<int>>>, int> ids;
    std::vector<int> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::vector<int>> sig;
      for (const auto& [ag, r] : a.relations) {
        std::vector<int> reach;
        for (int t : r[s]) reach.push_back(block[t]);
        sig.push_back(sorted_unique(std::move(reach)));
      }
      next[s] = ids.emplace(std::make_pair(block[s], std::move(sig)), static_cast<int>(ids.size())).first->second;
    }
    block = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  // Blocks are numbered by first member, so representatives keep point order.
  std::vector<int> rep;
  std::vector<int> renum(n, -1);
  for (std::size_t s = 0; s < n; ++s)
    if (renum[block[s]] < 0) {
      renum[block[s]] = static_cast<int>(rep.size());
      rep.push_back(static_cast<int>(s));
    }
  PointedActionModel out;
  out.model.agents = a.agents;
  for (int s : rep) {
    out.model.points.push_back(a.points[s]);
    out.model.pre.push_back(a.pre[s]);
  }
  for (const auto& [ag, r] : a.relations) {
    Relation q(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) {
      for (int t : r[rep[i]]) q[i].push_back(renum[block[t]]);
      q[i] = sorted_unique(std::move(q[i]));
    }
    out.model.relations[ag] = std::move(q);
  }
  for (int s : pa.designated) out.designated.push_back(renum[block[s]]);
  out.designated = sorted_unique(std::move(out.designated));
  return out;
}

PointedActionModel choice_union(const PointedActionModel& pa, const PointedActionModel& pb) {
  const ActionModel& a = pa.model;
  const ActionModel& b = pb.model;
  if (a.agents != b.agents) throw InputError("agent sets of joined action models differ");
  bool clash = false;
  std::set<std::string> names(a.points.begin(), a.points.end());
  for (const auto& p : b.points) clash = clash || names.count(p);

  PointedActionModel out;
  ActionModel& r = out.model;
  r.agents = a.agents;
  const int off = static_cast<int>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.points.push_back(clash ? a.points[i] + "#1" : a.points[i]);
    r.pre.push_back(a.pre[i]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    r.points.push_back(clash ? b.points[i] + "#2" : b.points[i]);
    r.pre.push_back(b.pre[i]);
  }
  for (const auto& ag : a.agents) {
    Relation rel = a.relations.at(ag);
    for (const auto& succ : b.relations.at(ag)) {
      std::vector<int> shifted;
      for (int v : succ) shifted.push_back(v + off);
      rel.push_back(std::move(shifted));
    }
    r.relations[ag] = std::move(rel);
  }
  out.designated = pa.designated;
  for (int t : pb.designated) out.designated.push_back(t + off);
  return out;
}

bool am_frame_class_holds(const ActionModel& a, FrameClass c) {
  for (const auto& [ag, r] : a.relations)
    if (!relation_in_class(r, c)) return false;
  return true;
}

PointedActionModel action_model_from_json(std::string_view text) {
  detail::RawModel raw = detail::parse_raw_model(text, "pre");
  PointedActionModel out;
  ActionModel& a = out.model;
  a.agents = raw.agents;
  a.points = raw.states;
  a.pre.assign(a.points.size(), Formula());
  if (!raw.payload.is_null()) {
    if (!raw.payload.is_object()) throw InputError("\"pre\" must map points to formula strings");
    for (auto it = raw.payload.begin(); it != raw.payload.end(); ++it) {
      int i = a.index_of(it.key());
      if (i < 0) throw InputError("precondition for unknown point '" + it.key() + "'");
      if (!it.value().is_string()) throw InputError("preconditions must be formula strings");
      a.pre[i] = parse_formula(it.value().get<std::string>(), a.agents);
    }
  }
  for (auto& p : a.pre)
    if (!p.valid()) p = top();
  for (const auto& ag : a.agents) a.relations[ag] = Relation(a.points.size());
  for (const auto& [ag, pairs] : raw.relations) {
    auto it = a.relations.find(ag);
    if (it == a.relations.end()) throw InputError("relation for undeclared agent '" + ag + "'");
    for (const auto& [s, t] : pairs) {
      int i = a.index_of(s), j = a.index_of(t);
      if (i < 0 || j < 0) throw InputError("relation mentions unknown point");
      it->second[i].push_back(j);
    }
    for (auto& succ : it->second) succ = sorted_unique(std::move(succ));
  }
  a.validate();
  for (const auto& p : raw.points) {
    int i = a.index_of(p);
    if (i < 0) throw InputError("unknown point '" + p + "'");
    out.designated.push_back(i);
  }
  out.designated = sorted_unique(std::move(out.designated));
  if (out.designated.empty()) throw InputError("an action model needs at least one designated point");
  return out;
}

std::string action_model_to_json(const PointedActionModel& pa) {
  const ActionModel& a = pa.model;
  nlohmann::ordered_json j;
  j["agents"] = std::vector<std::string>(a.agents.begin(), a.agents.end());
  j["states"] = a.points;
  nlohmann::ordered_json pre = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < a.size(); ++i) pre[a.points[i]] = print_formula(a.pre[i]);
  j["pre"] = pre;
  nlohmann::ordered_json rel = nlohmann::ordered_json::object();
  for (const auto& [ag, r] : a.relations) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (std::size_t u = 0; u < r.size(); ++u)
      for (int v : r[u]) pairs.push_back({a.points[u], a.points[v]});
    rel[ag] = pairs;
  }
  j["relations"] = rel;
  std::vector<std::string> pts;
  for (int t : pa.designated) pts.push_back(a.points[t]);
  j["points"] = pts;
  return j.dump(2) + "\n";
}

std::string export_dot(const PointedActionModel& pa) {
  const ActionModel& a = pa.model;
  std::ostringstream out;
  out << "digraph action {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << "  " << detail::dot_quote(a.points[i])
        << " [label=" << detail::dot_quote(a.points[i] + ": " + print_formula(a.pre[i]));
    if (std::binary_search(pa.designated.begin(), pa.designated.end(), static_cast<int>(i))) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [ag, r] : a.relations)
    for (std::size_t u = 0; u < r.size(); ++u)
      for (int v : r[u])
        out << "  " << detail::dot_quote(a.points[u]) << " -> " << detail::dot_quote(a.points[v])
            << " [label=" << detail::dot_quote(ag) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace aafl
