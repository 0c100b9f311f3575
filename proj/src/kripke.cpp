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

#include "aafl/kripke.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

#include "model_json.hpp"

namespace aafl {

namespace {

using Bits = std::vector<std::uint64_t>;

std::vector<Bits> to_bits(const Relation& r) {
  const std::size_t n = r.size(), words = (n + 63) / 64;
  std::vector<Bits> out(n, Bits(words, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (int v : r[u]) out[u][v / 64] |= std::uint64_t{1} << (v % 64);
  return out;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

Relation from_bits(const std::vector<Bits>& b) {
  Relation r(b.size());
  for (std::size_t u = 0; u < b.size(); ++u)
    for (std::size_t v = 0; v < b.size(); ++v)
      if (b[u][v / 64] >> (v % 64) & 1) r[u].push_back(static_cast<int>(v));
  return r;
}

}  // namespace

int KripkeModel::index_of(std::string_view state) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == state) return static_cast<int>(i);
  return -1;
}

const std::vector<int>& KripkeModel::succ(const std::string& agent, int s) const {
  auto it = relations.find(agent);
  if (it == relations.end()) throw InputError("unknown agent '" + agent + "'");
  return it->second[s];
}

void KripkeModel::validate() const {
  if (states.empty()) throw InputError("a Kripke model needs at least one state");
  if (agents.empty()) throw InputError("a Kripke model needs at least one agent");
  std::set<std::string> seen(states.begin(), states.end());
  if (seen.size() != states.size()) throw InputError("duplicate state names");
  if (valuation.size() != states.size()) throw InputError("valuation does not cover the states");
  if (relations.size() != agents.size()) throw InputError("relations must be given for exactly the declared agents");
  for (const auto& [a, r] : relations) {
    if (!agents.count(a)) throw InputError("relation for undeclared agent '" + a + "'");
    if (r.size() != states.size()) throw InputError("relation for '" + a + "' has the wrong size");
    for (const auto& succ : r)
      for (int v : succ)
        if (v < 0 || static_cast<std::size_t>(v) >= states.size()) throw InputError("relation endpoint out of range");
  }
}

KripkeModel make_model(const AgentSet& agents, const std::vector<std::string>& states,
                       const std::map<std::string, std::set<std::string>>& valuation,
                       const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& relations) {
  KripkeModel m;
  m.agents = agents;
  m.states = states;
  m.valuation.assign(states.size(), {});
  for (const auto& [s, atoms] : valuation) {
    int i = m.index_of(s);
    if (i < 0) throw InputError("valuation mentions unknown state '" + s + "'");
    m.valuation[i] = atoms;
  }
  for (const auto& a : agents) m.relations[a] = Relation(states.size());
  for (const auto& [a, pairs] : relations) {
    auto it = m.relations.find(a);
    if (it == m.relations.end()) throw InputError("relation for undeclared agent '" + a + "'");
    for (const auto& [s, t] : pairs) {
      int i = m.index_of(s), j = m.index_of(t);
      if (i < 0 || j < 0) throw InputError("relation mentions unknown state");
      it->second[i].push_back(j);
    }
    for (auto& succ : it->second) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
  }
  m.validate();
  return m;
}

PointedKripkeModel point(KripkeModel m, const std::vector<std::string>& designated) {
  PointedKripkeModel p{std::move(m), {}};
  for (const auto& s : designated) {
    int i = p.model.index_of(s);
    if (i < 0) throw InputError("unknown point '" + s + "'");
    p.designated.push_back(i);
  }
  std::sort(p.designated.begin(), p.designated.end());
  p.designated.erase(std::unique(p.designated.begin(), p.designated.end()), p.designated.end());
  return p;
}

bool relation_in_class(const Relation& r, FrameClass c) {
  if (c == FrameClass::K) return true;
  auto bits = to_bits(r);
  for (std::size_t u = 0; u < r.size(); ++u) {
    if (c == FrameClass::S5 && !(bits[u][u / 64] >> (u % 64) & 1)) return false;
    for (int v : r[u]) {
      if (!subset(bits[v], bits[u])) return false;  // transitive
      if (!subset(bits[u], bits[v])) return false;  // Euclidean
    }
  }
  return true;
}

bool frame_class_holds(const KripkeModel& m, FrameClass c) {
  for (const auto& [a, r] : m.relations)
    if (!relation_in_class(r, c)) return false;
  return true;
}

Relation close_relation(const Relation& r, FrameClass c) {
  const std::size_t n = r.size();
  if (c == FrameClass::K) return r;
  if (c == FrameClass::S5) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t u = 0; u < n; ++u)
      for (int v : r[u]) parent[find(static_cast<int>(u))] = find(v);
    Relation out(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (find(static_cast<int>(u)) == find(static_cast<int>(v))) out[u].push_back(static_cast<int>(v));
    return out;
  }
  auto bits = to_bits(r);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!(bits[u][v / 64] >> (v % 64) & 1)) continue;
        for (std::size_t i = 0; i < bits[u].size(); ++i) {
          std::uint64_t before_u = bits[u][i], before_v = bits[v][i];
          bits[u][i] |= bits[v][i];  // transitive
          bits[v][i] |= bits[u][i];  // Euclidean
          if (bits[u][i] != before_u || bits[v][i] != before_v) changed = true;
        }
      }
    }
  }
  return from_bits(bits);
}

DisjointUnion disjoint_union(const KripkeModel& m1, const KripkeModel& m2) {
  if (m1.agents != m2.agents) throw InputError("disjoint union needs equal agent sets");
  DisjointUnion u;
  KripkeModel& m = u.model;
  m.agents = m1.agents;
  const int n1 = static_cast<int>(m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) {
    m.states.push_back(m1.states[i] + "#1");
    m.valuation.push_back(m1.valuation[i]);
    u.left.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < m2.size(); ++i) {
    m.states.push_back(m2.states[i] + "#2");
    m.valuation.push_back(m2.valuation[i]);
    u.right.push_back(n1 + static_cast<int>(i));
  }
  for (const auto& a : m.agents) {
    Relation r;
    for (const auto& succ : m1.relations.at(a)) r.push_back(succ);
    for (const auto& succ : m2.relations.at(a)) {
      std::vector<int> shifted;
      for (int v : succ) shifted.push_back(v + n1);
      r.push_back(shifted);
    }
    m.relations[a] = std::move(r);
  }
  return u;
}

std::string export_dot(const PointedKripkeModel& pm) {
  const KripkeModel& m = pm.model;
  std::ostringstream out;
  out << "digraph model {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::string label = m.states[i];
    if (!m.valuation[i].empty()) {
      label += ":";
      bool first = true;
      for (const auto& p : m.valuation[i]) {
        label += first ? " " : ", ";
        label += p;
        first = false;
      }
    }
    out << "  " << detail::dot_quote(m.states[i]) << " [label=" << detail::dot_quote(label);
    if (std::binary_search(pm.designated.begin(), pm.designated.end(), static_cast<int>(i)))
      out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& [a, r] : m.relations)
    for (std::size_t u = 0; u < r.size(); ++u)
      for (int v : r[u])
        out << "  " << detail::dot_quote(m.states[u]) << " -> " << detail::dot_quote(m.states[v]) << " [label=" << detail::dot_quote(a) << "];\n";
  out << "}\n";
  return out.str();
}

std::string model_to_json(const PointedKripkeModel& pm) {
  const KripkeModel& m = pm.model;
  nlohmann::ordered_json j;
  j["agents"] = std::vector<std::string>(m.agents.begin(), m.agents.end());
  j["states"] = m.states;
  nlohmann::ordered_json val = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    val[m.states[i]] = std::vector<std::string>(m.valuation[i].begin(), m.valuation[i].end());
  j["valuation"] = val;
  nlohmann::ordered_json rel = nlohmann::ordered_json::object();
  for (const auto& [a, r] : m.relations) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (std::size_t u = 0; u < r.size(); ++u)
      for (int v : r[u]) pairs.push_back({m.states[u], m.states[v]});
    rel[a] = pairs;
  }
  j["relations"] = rel;
  std::vector<std::string> pts;
  for (int s : pm.designated) pts.push_back(m.states[s]);
  j["points"] = pts;
  return j.dump(2) + "\n";
}

namespace detail {

RawModel parse_raw_model(std::string_view text, const std::string& payload_key) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("model JSON must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "agents" && k != "states" && k != "relations" && k != "points" && k != payload_key)
      throw InputError("unknown key '" + k + "' in model JSON");
  }
  RawModel raw;
  try {
    if (!j.contains("agents") || !j.contains("states")) throw InputError("model JSON needs \"agents\" and \"states\"");
    for (const auto& a : j.at("agents")) raw.agents.insert(a.get<std::string>());
    for (const auto& s : j.at("states")) raw.states.push_back(s.get<std::string>());
    if (j.contains("relations")) {
      for (auto it = j.at("relations").begin(); it != j.at("relations").end(); ++it) {
        auto& pairs = raw.relations[it.key()];
        for (const auto& p : it.value()) {
          if (!p.is_array() || p.size() != 2) throw InputError("relation entries must be [source, target] pairs");
          pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
      }
    }
    for (const auto& a : raw.agents)
      if (!raw.relations.count(a)) throw InputError("no relation given for agent '" + a + "'");
    if (j.contains("points"))
      for (const auto& s : j.at("points")) raw.points.push_back(s.get<std::string>());
    if (j.contains(payload_key)) raw.payload = j.at(payload_key);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed model JSON: ") + e.what());
  }
  return raw;
}

}  // namespace detail

PointedKripkeModel model_from_json(std::string_view text) {
  detail::RawModel raw = detail::parse_raw_model(text, "valuation");
  std::map<std::string, std::set<std::string>> val;
  try {
    if (!raw.payload.is_null()) {
      if (!raw.payload.is_object()) throw InputError("\"valuation\" must map states to atom arrays");
      for (auto it = raw.payload.begin(); it != raw.payload.end(); ++it)
        for (const auto& p : it.value()) val[it.key()].insert(p.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed valuation: ") + e.what());
  }
  return point(make_model(raw.agents, raw.states, val, raw.relations), raw.points);
}

}  // namespace aafl
