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

#include "aafl/check.hpp"

#include "aafl/reduce.hpp"
#include "aafl/tau.hpp"

namespace aafl {

namespace {

using Truth = std::vector<char>;

const Relation& relation_of(const KripkeModel& m, const std::string& agent) {
  auto it = m.relations.find(agent);
  if (it == m.relations.end()) throw InputError("formula mentions agent '" + agent + "' outside the model's agents");
  return it->second;
}

// Shared clauses for the connectives and agent modalities; `sub` evaluates
// immediate subformulas in whichever evaluator is calling.
template <typename Sub>
Truth basic_step(const KripkeModel& m, Formula f, Sub&& sub) {
  const std::size_t n = m.size();
  Truth out(n, 0);
  switch (f.op()) {
    case Op::Top:
      out.assign(n, 1);
      break;
    case Op::Bottom:
      break;
    case Op::Atom:
      for (std::size_t s = 0; s < n; ++s) out[s] = m.valuation[s].count(f.name()) ? 1 : 0;
      break;
    case Op::Not: {
      const Truth& a = sub(f.kid(0));
      for (std::size_t s = 0; s < n; ++s) out[s] = !a[s];
      break;
    }
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff: {
      const Truth a = sub(f.kid(0));
      const Truth& b = sub(f.kid(1));
      for (std::size_t s = 0; s < n; ++s) {
        bool x = a[s], y = b[s];
        switch (f.op()) {
          case Op::And: out[s] = x && y; break;
          case Op::Or: out[s] = x || y; break;
          case Op::Implies: out[s] = !x || y; break;
          default: out[s] = x == y; break;
        }
      }
      break;
    }
    case Op::Box:
    case Op::Diamond: {
      const Relation& r = relation_of(m, f.name());
      const Truth& a = sub(f.kid(0));
      const bool is_box = f.op() == Op::Box;
      for (std::size_t s = 0; s < n; ++s) {
        bool v = is_box;
        for (int t : r[s])
          if (static_cast<bool>(a[t]) != is_box) {
            v = !is_box;
            break;
          }
        out[s] = v;
      }
      break;
    }
    case Op::Cover:
      return sub(expand_cover(f.name(), f.kids()));
    default:
      throw InputError("expected a basic formula");
  }
  return out;
}

}  // namespace

const std::vector<char>& Evaluator::truth(Formula f) {
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;
  Truth t = basic_step(m_, f, [this](Formula g) -> const Truth& { return truth(g); });
  return memo_.emplace(f, std::move(t)).first->second;
}

bool eval_basic(const PointedKripkeModel& m, Formula f) {
  Evaluator ev(m.model);
  const Truth& t = ev.truth(f);
  for (int s : m.designated)
    if (!t[s]) return false;
  return true;
}

const std::vector<char>& Checker::truth(Formula f) {
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;
  const std::size_t n = m_.size();
  Truth t;
  switch (f.op()) {
    case Op::DynBox:
    case Op::DynDiamond: {
      const bool is_box = f.op() == Op::DynBox;
      PointedActionModel pa = tau(f.action(), class_, m_.agents, true);
      PointedKripkeModel full{m_, {}};
      for (std::size_t s = 0; s < n; ++s) full.designated.push_back(static_cast<int>(s));
      std::vector<std::pair<int, int>> origin;
      PointedKripkeModel res = execute(full, pa, [this](int s, Formula pre) { return truth(pre)[s] != 0; }, &origin);
      t.assign(n, is_box ? 1 : 0);
      if (!res.designated.empty() && frame_class_holds(res.model, class_)) {
        Checker inner(res.model, class_);
        const Truth& post = inner.truth(f.kid(0));
        for (int j : res.designated) {
          int s = origin[j].first;
          if (is_box && !post[j]) t[s] = 0;
          if (!is_box && post[j]) t[s] = 1;
        }
      }
      break;
    }
    case Op::RefBox:
    case Op::RefDiamond:
      t = truth(reduce(f, class_));
      break;
    default:
      t = basic_step(m_, f, [this](Formula g) -> const Truth& { return truth(g); });
  }
  return memo_.emplace(f, std::move(t)).first->second;
}

namespace {

void require_class(const PointedKripkeModel& m, Formula f, FrameClass c) {
  if (!frame_class_holds(m.model, c)) throw InputError("the model is not in class " + to_string(c));
  for (const auto& a : agents_of(f))
    if (!m.model.agents.count(a)) throw InputError("formula mentions agent '" + a + "' outside the model's agents");
}

}  // namespace

bool check(const PointedKripkeModel& m, Formula f, FrameClass c) {
  require_class(m, f, c);
  Checker ch(m.model, c);
  const Truth& t = ch.truth(f);
  for (int s : m.designated)
    if (!t[s]) return false;
  return true;
}

bool check_via_reduction(const PointedKripkeModel& m, Formula f, FrameClass c) {
  require_class(m, f, c);
  return eval_basic(m, reduce(f, c));
}

}  // namespace aafl
