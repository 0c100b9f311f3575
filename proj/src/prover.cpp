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

#include "aafl/prover.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <unordered_set>

namespace aafl {

namespace {

enum class Kind : std::uint8_t { True, False, Pos, Neg, And, Or, Box, Dia };

struct Node {
  Kind kind;
  int sym;  // atom id for literals, agent id for modal nodes
  std::vector<int> kids;
};

// Outcome of saturating one world.  Demand carries an incoming-agent modal
// formula the world needs but its parent has not decided.
struct Res {
  enum Tag { Sat, Unsat, Demand } tag = Unsat;
  int demand = -1;
  std::shared_ptr<const std::vector<int>> members;
};

constexpr std::size_t kMemoLimit = 1'000'000;

}  // namespace

struct Prover::Impl {
  FrameClass cls;
  std::size_t budget = 0;
  std::size_t ticks = 0;

  std::vector<Node> nodes;
  std::vector<int> neg_of;
  std::map<std::tuple<Kind, int, std::vector<int>>, int> index;
  std::unordered_map<std::uint64_t, int> nnf_memo;
  std::map<std::string, int> atom_ids, agent_ids;
  std::vector<std::string> atom_names, agent_names;
  std::map<std::vector<int>, Res> memo;

  explicit Impl(FrameClass c) : cls(c) {
    intern(Kind::True, -1, {});
    intern(Kind::False, -1, {});
  }

  static constexpr int kTrue = 0;
  static constexpr int kFalse = 1;

  int intern(Kind k, int sym, std::vector<int> kids) {
    auto key = std::make_tuple(k, sym, kids);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(Node{k, sym, std::move(kids)});
    neg_of.push_back(-1);
    index.emplace(std::move(key), id);
    return id;
  }

  int junction(Kind k, const std::vector<int>& in) {
    const int unit = k == Kind::And ? kTrue : kFalse;
    const int zero = k == Kind::And ? kFalse : kTrue;
    std::vector<int> kids;
    for (int x : in) {
      if (x == unit) continue;
      if (x == zero) return zero;
      if (nodes[x].kind == k)
        kids.insert(kids.end(), nodes[x].kids.begin(), nodes[x].kids.end());
      else
        kids.push_back(x);
    }
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    if (kids.empty()) return unit;
    if (kids.size() == 1) return kids[0];
    return intern(k, -1, std::move(kids));
  }

  int sym_id(std::map<std::string, int>& ids, std::vector<std::string>& names, const std::string& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(names.size()));
    if (fresh) names.push_back(s);
    return it->second;
  }

  int modal(Kind k, const std::string& agent, int body) {
    return intern(k, sym_id(agent_ids, agent_names, agent), {body});
  }

  int nnf(Formula f, bool negated) {
    std::uint64_t key = f.id() * 2 + (negated ? 1 : 0);
    auto it = nnf_memo.find(key);
    if (it != nnf_memo.end()) return it->second;
    int r = -1;
    switch (f.op()) {
      case Op::Top:
        r = negated ? kFalse : kTrue;
        break;
      case Op::Bottom:
        r = negated ? kTrue : kFalse;
        break;
      case Op::Atom:
        r = intern(negated ? Kind::Neg : Kind::Pos, sym_id(atom_ids, atom_names, f.name()), {});
        break;
      case Op::Not:
        r = nnf(f.kid(0), !negated);
        break;
      case Op::And:
      case Op::Or: {
        bool is_and = (f.op() == Op::And) != negated;
        r = junction(is_and ? Kind::And : Kind::Or, {nnf(f.kid(0), negated), nnf(f.kid(1), negated)});
        break;
      }
      case Op::Implies:
        r = negated ? junction(Kind::And, {nnf(f.kid(0), false), nnf(f.kid(1), true)})
                    : junction(Kind::Or, {nnf(f.kid(0), true), nnf(f.kid(1), false)});
        break;
      case Op::Iff: {
        int a = nnf(f.kid(0), false), na = nnf(f.kid(0), true);
        int b = nnf(f.kid(1), false), nb = nnf(f.kid(1), true);
        r = negated ? junction(Kind::Or, {junction(Kind::And, {a, nb}), junction(Kind::And, {na, b})})
                    : junction(Kind::Or, {junction(Kind::And, {a, b}), junction(Kind::And, {na, nb})});
        break;
      }
      case Op::Box:
        r = modal(negated ? Kind::Dia : Kind::Box, f.name(), nnf(f.kid(0), negated));
        break;
      case Op::Diamond:
        r = modal(negated ? Kind::Box : Kind::Dia, f.name(), nnf(f.kid(0), negated));
        break;
      case Op::Cover:
        r = nnf(expand_cover(f.name(), f.kids()), negated);
        break;
      default:
        throw InputError("the prover accepts basic formulas only");
    }
    nnf_memo.emplace(key, r);
    return r;
  }

  int neg(int x) {
    if (neg_of[x] >= 0) return neg_of[x];
    const Node n = nodes[x];
    int r = -1;
    switch (n.kind) {
      case Kind::True: r = kFalse; break;
      case Kind::False: r = kTrue; break;
      case Kind::Pos: r = intern(Kind::Neg, n.sym, {}); break;
      case Kind::Neg: r = intern(Kind::Pos, n.sym, {}); break;
      case Kind::And:
      case Kind::Or: {
        std::vector<int> ks;
        for (int k : n.kids) ks.push_back(neg(k));
        r = junction(n.kind == Kind::And ? Kind::Or : Kind::And, ks);
        break;
      }
      case Kind::Box: r = intern(Kind::Dia, n.sym, {neg(n.kids[0])}); break;
      case Kind::Dia: r = intern(Kind::Box, n.sym, {neg(n.kids[0])}); break;
    }
    neg_of[x] = r;
    if (neg_of[r] < 0) neg_of[r] = x;
    return r;
  }

  // Make sure negations exist for everything the search can touch, so the
  // node table does not grow mid-search.
  void close(int root) {
    std::vector<int> stack{root};
    std::unordered_set<int> seen;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      int nx = neg(x);
      stack.push_back(nx);
      for (int k : nodes[x].kids) stack.push_back(k);
    }
  }

  // ---- search ---------------------------------------------------------

  struct Ctx {
    int via;
    std::unordered_set<int> in;
    std::vector<int> members;
  };

  enum class St { Ok, Clash, Dem };

  void tick() {
    if (++ticks > budget) throw ResourceExhausted("prover budget of " + std::to_string(budget) + " steps exhausted");
  }

  static bool is_modal(const Node& n) { return n.kind == Kind::Box || n.kind == Kind::Dia; }

  St add(Ctx& c, int f, std::vector<int>& todo, int& dem) {
    if (f == kTrue || c.in.count(f)) return St::Ok;
    if (f == kFalse || c.in.count(neg_of[f])) return St::Clash;
    const Node& n = nodes[f];
    if (c.via >= 0 && is_modal(n) && n.sym == c.via) {
      dem = f;
      return St::Dem;
    }
    c.in.insert(f);
    c.members.push_back(f);
    todo.push_back(f);
    return St::Ok;
  }

  static Res from(St st, int dem) {
    Res r;
    r.tag = st == St::Dem ? Res::Demand : Res::Unsat;
    r.demand = dem;
    return r;
  }

  static void undo(Ctx& c, std::size_t mark) {
    while (c.members.size() > mark) {
      c.in.erase(c.members.back());
      c.members.pop_back();
    }
  }

  Res expand(Ctx& c, std::vector<int> todo) {
    tick();
    while (!todo.empty()) {
      const int f = todo.back();
      todo.pop_back();
      const Node& n = nodes[f];
      int dem = -1;
      if (n.kind == Kind::And || (n.kind == Kind::Box && cls == FrameClass::S5)) {
        for (int k : n.kids) {
          St st = add(c, k, todo, dem);
          if (st != St::Ok) return from(st, dem);
        }
      } else if (n.kind == Kind::Or) {
        bool done = false;
        for (int k : n.kids) done = done || c.in.count(k) > 0;
        if (done) continue;
        const std::size_t mark = c.members.size();
        Res best;
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
          std::vector<int> t2 = todo;
          St st = add(c, n.kids[i], t2, dem);
          for (std::size_t j = 0; j < i && st == St::Ok; ++j) st = add(c, neg_of[n.kids[j]], t2, dem);
          Res r = st == St::Ok ? expand(c, std::move(t2)) : from(st, dem);
          undo(c, mark);
          if (r.tag == Res::Sat) return r;
          if (r.tag == Res::Demand && best.tag == Res::Unsat) best = r;
        }
        return best;
      }
    }
    return modal_phase(c);
  }

  struct AgentPart {
    std::vector<int> dias, bodies, theory;
  };

  std::map<int, AgentPart> split_by_agent(const std::vector<int>& members, int via) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    std::map<int, AgentPart> parts;
    for (int f : sorted) {
      const Node& n = nodes[f];
      if (!is_modal(n) || n.sym == via) continue;
      AgentPart& p = parts[n.sym];
      p.theory.push_back(f);
      (n.kind == Kind::Dia ? p.dias : p.bodies).push_back(n.kids[0]);
    }
    return parts;
  }

  std::vector<int> child_label(int d, const std::vector<int>& bodies) {
    std::vector<int> label = bodies;
    label.push_back(d);
    std::sort(label.begin(), label.end());
    label.erase(std::unique(label.begin(), label.end()), label.end());
    return label;
  }

  Res modal_phase(Ctx& c) {
    for (auto& [a, part] : split_by_agent(c.members, c.via)) {
      for (int d : part.dias) {
        std::vector<int> label = child_label(d, part.bodies);
        Res r = cls == FrameClass::K ? world(label, -1, {}) : world(label, a, part.theory);
        if (r.tag == Res::Sat) continue;
        if (r.tag == Res::Unsat) return r;
        const std::size_t mark = c.members.size();
        Res best;
        for (int choice : {r.demand, neg_of[r.demand]}) {
          std::vector<int> todo;
          int dem = -1;
          St st = add(c, choice, todo, dem);
          Res r2 = st == St::Ok ? expand(c, std::move(todo)) : from(st, dem);
          undo(c, mark);
          if (r2.tag == Res::Sat) return r2;
          if (r2.tag == Res::Demand && best.tag == Res::Unsat) best = r2;
        }
        return best;
      }
    }
    Res ok;
    ok.tag = Res::Sat;
    ok.members = std::make_shared<const std::vector<int>>(c.members);
    return ok;
  }

  Res world(const std::vector<int>& label, int via, const std::vector<int>& theory) {
    std::vector<int> key;
    key.reserve(label.size() + theory.size() + 2);
    key.push_back(via);
    key.push_back(static_cast<int>(theory.size()));
    key.insert(key.end(), theory.begin(), theory.end());
    key.insert(key.end(), label.begin(), label.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Ctx c{via, {}, {}};
    std::vector<int> todo;
    Res r;
    bool failed = false;
    for (int t : theory) {
      if (c.in.count(neg_of[t])) {
        failed = true;
        break;
      }
      if (c.in.insert(t).second) {
        c.members.push_back(t);
        todo.push_back(t);
      }
    }
    for (std::size_t i = 0; i < label.size() && !failed; ++i) {
      int dem = -1;
      St st = add(c, label[i], todo, dem);
      if (st != St::Ok) {
        r = from(st, dem);
        failed = true;
      }
    }
    if (!failed) r = expand(c, std::move(todo));
    memo.emplace(std::move(key), r);
    return r;
  }

  int prepare(Formula f) {
    if (memo.size() > kMemoLimit) memo.clear();
    int root = nnf(f, false);
    close(root);
    return root;
  }

  bool sat(Formula f) {
    ticks = 0;
    int root = prepare(f);
    return world({root}, -1, {}).tag == Res::Sat;
  }

  // ---- model extraction -----------------------------------------------

  struct TreeNode {
    std::vector<int> members;
    int via;
    int parent;
    std::map<int, std::vector<int>> children;  // agent -> child indices
  };

  int build(std::vector<TreeNode>& tree, const std::vector<int>& label, int via, const std::vector<int>& theory,
            int parent) {
    Res r = world(label, via, theory);
    if (r.tag != Res::Sat) throw Error("internal: model extraction hit an unsatisfiable world");
    int idx = static_cast<int>(tree.size());
    tree.push_back(TreeNode{*r.members, via, parent, {}});
    for (auto& [a, part] : split_by_agent(*r.members, via)) {
      for (int d : part.dias) {
        std::vector<int> cl = child_label(d, part.bodies);
        int child = cls == FrameClass::K ? build(tree, cl, -1, {}, idx) : build(tree, cl, a, part.theory, idx);
        tree[idx].children[a].push_back(child);
      }
    }
    return idx;
  }

  std::optional<PointedKripkeModel> extract(Formula f, const AgentSet& agents) {
    ticks = 0;
    int root = prepare(f);
    if (world({root}, -1, {}).tag != Res::Sat) return std::nullopt;
    std::vector<TreeNode> tree;
    build(tree, {root}, -1, {}, -1);
    AgentSet all = agents;
    for (const auto& n : agent_names) all.insert(n);

    KripkeModel m;
    m.agents = all;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      m.states.push_back("w" + std::to_string(i));
      std::set<std::string> val;
      for (int f2 : tree[i].members)
        if (nodes[f2].kind == Kind::Pos) val.insert(atom_names[nodes[f2].sym]);
      m.valuation.push_back(std::move(val));
    }
    for (const auto& a : all) m.relations[a] = Relation(tree.size());
    for (std::size_t i = 0; i < tree.size(); ++i) {
      for (const auto& [aid, kids] : tree[i].children) {
        Relation& rel = m.relations[agent_names[aid]];
        std::vector<int> cluster = kids;
        if (cls == FrameClass::S5) cluster.push_back(static_cast<int>(i));
        std::sort(cluster.begin(), cluster.end());
        rel[i] = cluster;
        if (cls != FrameClass::K)
          for (int k : kids) rel[k] = cluster;
      }
    }
    if (cls == FrameClass::S5) {
      // Singleton classes for worlds that own no successors of some agent.
      for (const auto& a : all) {
        int aid = agent_ids.count(a) ? agent_ids.at(a) : -2;
        Relation& rel = m.relations[a];
        for (std::size_t i = 0; i < tree.size(); ++i)
          if (tree[i].via != aid && !tree[i].children.count(aid)) rel[i] = {static_cast<int>(i)};
      }
    }
    return point(std::move(m), {"w0"});
  }
};

Prover::Prover(FrameClass c, std::size_t budget) : class_(c), budget_(budget), impl_(std::make_unique<Impl>(c)) {}
Prover::~Prover() = default;
Prover::Prover(Prover&&) noexcept = default;
Prover& Prover::operator=(Prover&&) noexcept = default;

bool Prover::satisfiable(Formula f) {
  impl_->budget = budget_;
  return impl_->sat(f);
}

bool Prover::valid(Formula f) { return !satisfiable(neg(f)); }

bool Prover::equiv(Formula f, Formula g) {
  if (f == g) return true;
  return valid(iff(f, g));
}

std::optional<PointedKripkeModel> Prover::model(Formula f, const AgentSet& agents) {
  impl_->budget = budget_;
  return impl_->extract(f, agents);
}

namespace {

Prover& shared_prover(FrameClass c, std::size_t budget) {
  thread_local std::array<std::unique_ptr<Prover>, 3> provers;
  auto& p = provers[static_cast<int>(c)];
  if (!p) p = std::make_unique<Prover>(c, budget);
  p->set_budget(budget);
  return *p;
}

}  // namespace

bool valid(Formula f, FrameClass c, std::size_t budget) { return shared_prover(c, budget).valid(f); }
bool satisfiable(Formula f, FrameClass c, std::size_t budget) { return shared_prover(c, budget).satisfiable(f); }
bool equiv(Formula f, Formula g, FrameClass c, std::size_t budget) { return shared_prover(c, budget).equiv(f, g); }

}  // namespace aafl
