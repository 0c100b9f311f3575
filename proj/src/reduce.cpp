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

#include "aafl/reduce.hpp"

#include <map>
#include <memory>
#include <unordered_map>
#include <utility>

#include "aafl/normform.hpp"
#include "aafl/tau.hpp"

namespace aafl {

namespace {

using Memo = std::unordered_map<Formula, Formula, FormulaHash>;

// Step counter shared by the mutually recursive rewriters of one top-level call.
struct Budget {
  std::size_t left = kDefaultReduceBudget;
  void charge(std::size_t n = 1) {
    if (n > left) throw ResourceExhausted("reduction exceeded its node budget");
    left -= n;
  }
};

thread_local Budget* active_budget = nullptr;

void charge(std::size_t n = 1) {
  if (active_budget) active_budget->charge(n);
}

struct BudgetScope {
  Budget budget;
  Budget* saved;
  explicit BudgetScope(std::size_t n) : saved(active_budget) {
    budget.left = n;
    active_budget = &budget;
  }
  ~BudgetScope() { active_budget = saved; }
};

int class_index(FrameClass c) { return static_cast<int>(c); }

Memo& reduce_memo(FrameClass c) {
  thread_local std::map<int, Memo> memos;
  return memos[class_index(c)];
}

Memo& exists_memo(FrameClass c) {
  thread_local std::map<int, Memo> memos;
  return memos[class_index(c)];
}

Formula reduce_rec(Formula f, FrameClass c);

PointedActionModel with_basic_preconditions(PointedActionModel a, FrameClass c) {
  for (auto& p : a.model.pre)
    if (!is_basic(p)) p = reduce_rec(p, c);
  return a;
}

// [A,t] phi for a core phi, memoised per point.
class BoxAt {
 public:
  explicit BoxAt(const PointedActionModel& a) : a_(a), memo_(a.model.size()) {}

  Formula operator()(int t, Formula phi) {
    auto it = memo_[t].find(phi);
    if (it != memo_[t].end()) return it->second;
    charge();
    Formula pre = a_.model.pre[t];
    Formula r;
    switch (phi.op()) {
      case Op::Top: r = top(); break;
      case Op::Bottom: r = mk_not(pre); break;
      case Op::Atom: r = mk_implies(pre, phi); break;
      case Op::Not: r = mk_implies(pre, mk_not((*this)(t, phi.kid(0)))); break;
      case Op::And: r = mk_and((*this)(t, phi.kid(0)), (*this)(t, phi.kid(1))); break;
      case Op::Box: {
        const std::string& ag = phi.name();
        std::vector<Formula> parts;
        if (a_.model.relations.count(ag))
          for (int u : a_.model.succ(ag, t)) parts.push_back((*this)(u, phi.kid(0)));
        r = mk_implies(pre, mk_box(ag, conj_all(parts)));
        break;
      }
      default: throw Error("internal: action box over a non-core formula");
    }
    memo_[t].emplace(phi, r);
    return r;
  }

 private:
  const PointedActionModel& a_;
  std::vector<Memo> memo_;
};

Formula exists_k(Formula f, FrameClass c, bool alternating) {
  const Dnf& d = alternating ? *to_adnf(f) : *to_dnf(f);
  std::vector<Formula> out;
  for (const auto& clause : d.clauses) {
    charge();
    std::vector<Formula> parts{clause.pi};
    for (const auto& [a, gamma] : clause.covers)
      for (Formula g : gamma) parts.push_back(mk_diamond(a, reduce_exists(g, c)));
    out.push_back(conj_all(parts));
  }
  return disj_all(out);
}

Formula exists_s5(Formula f) {
  std::vector<Formula> out;
  for (const auto& w : s5_witnesses(f)) {
    charge();
    std::vector<Formula> parts{w.pi, reduce_exists(w.gamma0, FrameClass::S5)};
    for (const auto& [a, needs] : w.needs)
      for (Formula nu : needs) parts.push_back(mk_diamond(a, reduce_exists(nu, FrameClass::S5)));
    out.push_back(conj_all(parts));
  }
  return disj_all(out);
}

Formula exists_basic(Formula f, FrameClass c) {
  // Propositional bodies are their own refinement witnesses.
  if (is_propositional(f)) return f;
  Memo& memo = exists_memo(c);
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  Formula r;
  switch (c) {
    case FrameClass::K: r = exists_k(f, c, false); break;
    case FrameClass::K45: r = exists_k(f, c, true); break;
    case FrameClass::S5: r = exists_s5(f); break;
  }
  memo.emplace(f, r);
  return r;
}

Formula reduce_rec(Formula f, FrameClass c) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom: return f;
    default: break;
  }
  Memo& memo = reduce_memo(c);
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  charge();
  Formula r;
  switch (f.op()) {
    case Op::Not: r = mk_not(reduce_rec(f.kid(0), c)); break;
    case Op::And: r = mk_and(reduce_rec(f.kid(0), c), reduce_rec(f.kid(1), c)); break;
    case Op::Or: r = mk_or(reduce_rec(f.kid(0), c), reduce_rec(f.kid(1), c)); break;
    case Op::Implies: r = mk_implies(reduce_rec(f.kid(0), c), reduce_rec(f.kid(1), c)); break;
    case Op::Iff: r = mk_iff(reduce_rec(f.kid(0), c), reduce_rec(f.kid(1), c)); break;
    case Op::Box: r = mk_box(f.name(), reduce_rec(f.kid(0), c)); break;
    case Op::Diamond: r = mk_diamond(f.name(), reduce_rec(f.kid(0), c)); break;
    case Op::Cover: {
      std::vector<Formula> ms;
      for (Formula m : f.kids()) ms.push_back(reduce_rec(m, c));
      r = cover(f.name(), ms);
      break;
    }
    case Op::DynBox:
    case Op::DynDiamond: {
      Formula post = reduce_rec(f.kid(0), c);
      PointedActionModel a = with_basic_preconditions(tau(f.action(), c, agents_of(f), true), c);
      charge(a.model.size());
      r = f.op() == Op::DynBox ? action_box(a, post) : mk_not(action_box(a, mk_not(post)));
      break;
    }
    case Op::RefDiamond: r = exists_basic(reduce_rec(f.kid(0), c), c); break;
    case Op::RefBox: r = mk_not(exists_basic(mk_not(reduce_rec(f.kid(0), c)), c)); break;
    default: throw Error("internal: unknown formula operator");
  }
  memo.emplace(f, r);
  return r;
}

// ---- fast path ----------------------------------------------------------------

Formula fast(Formula f);

// [alpha] phi for basic phi by the learning axioms.
Formula fast_dyn(Action a, Formula phi) {
  switch (a.op()) {
    case ActOp::Test: return mk_implies(fast(a.test()), phi);
    case ActOp::Choice: return mk_and(fast_dyn(a.kid(0), phi), fast_dyn(a.kid(1), phi));
    case ActOp::Compose: return fast_dyn(a.kid(0), fast_dyn(a.kid(1), phi));
    case ActOp::Learn: break;
  }
  Formula g = to_core(phi);
  switch (g.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom: return g;
    case Op::Not: return mk_not(fast_dyn(a, g.kid(0)));
    case Op::And: return mk_and(fast_dyn(a, g.kid(0)), fast_dyn(a, g.kid(1)));
    case Op::Box: {
      if (!a.agents().count(g.name())) return mk_box(g.name(), g.kid(0));
      Action inner = a.kid(0) == a.kid(1) ? a.kid(0) : choice(a.kid(0), a.kid(1));
      return mk_box(g.name(), fast_dyn(inner, g.kid(0)));
    }
    default: throw Error("internal: learning axiom over a non-core formula");
  }
}

Formula fast(Formula f) {
  thread_local Memo memo;
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom: return f;
    default: break;
  }
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  Formula r;
  switch (f.op()) {
    case Op::Not: r = mk_not(fast(f.kid(0))); break;
    case Op::And: r = mk_and(fast(f.kid(0)), fast(f.kid(1))); break;
    case Op::Or: r = mk_or(fast(f.kid(0)), fast(f.kid(1))); break;
    case Op::Implies: r = mk_implies(fast(f.kid(0)), fast(f.kid(1))); break;
    case Op::Iff: r = mk_iff(fast(f.kid(0)), fast(f.kid(1))); break;
    case Op::Box: r = mk_box(f.name(), fast(f.kid(0))); break;
    case Op::Diamond: r = mk_diamond(f.name(), fast(f.kid(0))); break;
    case Op::Cover: {
      std::vector<Formula> ms;
      for (Formula m : f.kids()) ms.push_back(fast(m));
      r = cover(f.name(), ms);
      break;
    }
    case Op::DynBox: r = fast_dyn(f.action(), fast(f.kid(0))); break;
    case Op::DynDiamond: r = mk_not(fast_dyn(f.action(), mk_not(fast(f.kid(0))))); break;
    default: throw InputError("the learning-axiom path does not handle refinement quantifiers");
  }
  memo.emplace(f, r);
  return r;
}

}  // namespace

Formula reduce(Formula f, FrameClass c, std::size_t budget) {
  BudgetScope scope(budget);
  return reduce_rec(f, c);
}

Formula reduce_afl_fastpath(Formula f, FrameClass c) {
  if (c != FrameClass::K) throw InputError("the learning-axiom path is defined for class K only");
  return fast(f);
}

Formula action_box(const PointedActionModel& a, Formula post) {
  BoxAt box_at(a);
  Formula core = to_core(post);
  std::vector<Formula> parts;
  for (int t : a.designated) parts.push_back(box_at(t, core));
  return conj_all(parts);
}

Formula action_diamond_at(const PointedActionModel& a, int point, Formula post) {
  BoxAt box_at(a);
  return mk_not(box_at(point, to_core(mk_not(post))));
}

Formula reduce_exists(Formula f, FrameClass c) {
  if (!is_basic(f)) f = reduce_rec(f, c);
  return exists_basic(f, c);
}

Normalizer reducing_normalizer(FrameClass c) {
  // The product construction calls this once per pair with the same left
  // operand, so the translated operand and its box table are kept between calls.
  struct Cache {
    const PointedActionModel* source = nullptr;
    std::unique_ptr<PointedActionModel> basic;
    std::unique_ptr<BoxAt> box_at;
  };
  auto cache = std::make_shared<Cache>();
  return [c, cache](const PointedActionModel& a, int point, Formula post) {
    if (cache->source != &a) {
      cache->source = &a;
      cache->basic = std::make_unique<PointedActionModel>(with_basic_preconditions(a, c));
      cache->box_at = std::make_unique<BoxAt>(*cache->basic);
    }
    return mk_not((*cache->box_at)(point, to_core(mk_not(reduce_rec(post, c)))));
  };
}

}  // namespace aafl
