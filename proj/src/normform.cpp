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

#include "aafl/normform.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "aafl/prover.hpp"

namespace aafl {

namespace {

using Memo = std::unordered_map<Formula, Formula, FormulaHash>;

bool is_modal(Formula f) { return f.op() == Op::Box || f.op() == Op::Diamond; }

// Negation normal form over true, false, literals, &, |, [a] and <a>.
Formula nnf(Formula f, bool negated) {
  thread_local Memo memo_pos, memo_neg;
  Memo& memo = negated ? memo_neg : memo_pos;
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  Formula r;
  switch (f.op()) {
    case Op::Top: r = negated ? bottom() : top(); break;
    case Op::Bottom: r = negated ? top() : bottom(); break;
    case Op::Atom: r = negated ? neg(f) : f; break;
    case Op::Not: r = nnf(f.kid(0), !negated); break;
    case Op::And:
      r = negated ? mk_or(nnf(f.kid(0), true), nnf(f.kid(1), true)) : mk_and(nnf(f.kid(0), false), nnf(f.kid(1), false));
      break;
    case Op::Or:
      r = negated ? mk_and(nnf(f.kid(0), true), nnf(f.kid(1), true)) : mk_or(nnf(f.kid(0), false), nnf(f.kid(1), false));
      break;
    case Op::Implies:
      r = negated ? mk_and(nnf(f.kid(0), false), nnf(f.kid(1), true)) : mk_or(nnf(f.kid(0), true), nnf(f.kid(1), false));
      break;
    case Op::Iff: {
      Formula a = nnf(f.kid(0), false), na = nnf(f.kid(0), true);
      Formula b = nnf(f.kid(1), false), nb = nnf(f.kid(1), true);
      r = negated ? mk_or(mk_and(a, nb), mk_and(na, b)) : mk_or(mk_and(a, b), mk_and(na, nb));
      break;
    }
    case Op::Box:
      r = negated ? mk_diamond(f.name(), nnf(f.kid(0), true)) : mk_box(f.name(), nnf(f.kid(0), false));
      break;
    case Op::Diamond:
      r = negated ? mk_box(f.name(), nnf(f.kid(0), true)) : mk_diamond(f.name(), nnf(f.kid(0), false));
      break;
    case Op::Cover: r = nnf(expand_cover(f.name(), f.kids()), negated); break;
    default: throw InputError("normal forms are defined for basic formulae only");
  }
  memo.emplace(f, r);
  return r;
}

// Propositional DNF over modal literals of an NNF formula.
using Term = std::vector<Formula>;

std::vector<Term> terms(Formula g) {
  switch (g.op()) {
    case Op::Bottom: return {};
    case Op::Top: return {Term{}};
    case Op::Or: {
      auto a = terms(g.kid(0));
      auto b = terms(g.kid(1));
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case Op::And: {
      auto a = terms(g.kid(0));
      auto b = terms(g.kid(1));
      std::vector<Term> out;
      for (const auto& x : a)
        for (const auto& y : b) {
          Term t = x;
          t.insert(t.end(), y.begin(), y.end());
          out.push_back(std::move(t));
        }
      return out;
    }
    default: return {Term{g}};
  }
}

std::shared_ptr<const Dnf> build_dnf(Formula g, const std::function<std::shared_ptr<const Dnf>(Formula)>& member_nf) {
  auto out = std::make_shared<Dnf>();
  for (const Term& t : terms(g)) {
    FormulaSet pos, negs;
    std::map<std::string, std::vector<Formula>> boxes, dias;
    std::set<std::string> agents;
    for (Formula lit : t) {
      if (lit.op() == Op::Atom) pos.insert(lit);
      else if (lit.op() == Op::Not) negs.insert(lit.kid(0));
      else {
        boxes[lit.name()];
        (lit.op() == Op::Box ? boxes : dias)[lit.name()].push_back(lit.kid(0));
        agents.insert(lit.name());
      }
    }
    bool clash = false;
    for (Formula p : pos) clash = clash || negs.count(p);
    if (clash) continue;
    std::vector<Formula> lits(pos.begin(), pos.end());
    for (Formula p : negs) lits.push_back(neg(p));
    Formula pi = conj_all(lits);

    // Alternatives per agent; the clause list is their product.
    std::vector<DnfClause> partial{DnfClause{pi, {}}};
    for (const auto& a : agents) {
      Formula phi = conj_all(boxes[a]);
      std::vector<std::vector<Formula>> options;
      auto satisfiable_member = [&](Formula m) { return !member_nf(m)->clauses.empty(); };
      if (!dias[a].empty()) {
        std::vector<Formula> gamma;
        bool ok = satisfiable_member(phi);
        for (Formula psi : dias[a]) {
          Formula m = mk_and(phi, psi);
          ok = ok && satisfiable_member(m);
          gamma.push_back(m);
        }
        gamma.push_back(phi);
        if (ok) options.push_back(gamma);
      } else {
        if (satisfiable_member(phi)) options.push_back({phi});
        options.push_back({});
      }
      std::vector<DnfClause> next;
      for (const auto& c : partial)
        for (const auto& gamma : options) {
          DnfClause d = c;
          FormulaSet uniq(gamma.begin(), gamma.end());
          d.covers[a] = std::vector<Formula>(uniq.begin(), uniq.end());
          next.push_back(std::move(d));
        }
      partial = std::move(next);
    }
    out->clauses.insert(out->clauses.end(), partial.begin(), partial.end());
  }
  return out;
}

// ---- K45 flattening -------------------------------------------------------

// First a-modal subformula not below another modal operator.
Formula top_modal(Formula g, const std::string& a) {
  if (is_modal(g)) return g.name() == a ? g : Formula();
  if (g.op() == Op::And || g.op() == Op::Or) {
    Formula x = top_modal(g.kid(0), a);
    return x.valid() ? x : top_modal(g.kid(1), a);
  }
  return Formula();
}

Formula subst_top(Formula g, Formula mu, Formula nmu, bool value) {
  if (g == mu) return value ? top() : bottom();
  if (g == nmu) return value ? bottom() : top();
  if (g.op() == Op::And) return mk_and(subst_top(g.kid(0), mu, nmu, value), subst_top(g.kid(1), mu, nmu, value));
  if (g.op() == Op::Or) return mk_or(subst_top(g.kid(0), mu, nmu, value), subst_top(g.kid(1), mu, nmu, value));
  return g;
}

Formula flat(Formula g) {
  thread_local Memo memo;
  auto it = memo.find(g);
  if (it != memo.end()) return it->second;
  Formula r = g;
  switch (g.op()) {
    case Op::And: r = mk_and(flat(g.kid(0)), flat(g.kid(1))); break;
    case Op::Or: r = mk_or(flat(g.kid(0)), flat(g.kid(1))); break;
    case Op::Box:
    case Op::Diamond: {
      const std::string a = g.name();
      const bool is_box = g.op() == Op::Box;
      Formula body = flat(g.kid(0));
      Formula mu = top_modal(body, a);
      if (!mu.valid()) {
        r = is_box ? mk_box(a, body) : mk_diamond(a, body);
        break;
      }
      Formula nmu = nnf(mu, true);
      auto wrap = [&](Formula b) { return flat(is_box ? mk_box(a, b) : mk_diamond(a, b)); };
      r = mk_or(mk_and(mu, wrap(subst_top(body, mu, nmu, true))), mk_and(nmu, wrap(subst_top(body, mu, nmu, false))));
      break;
    }
    default: break;
  }
  memo.emplace(g, r);
  return r;
}

bool member_alternating(Formula m, const std::string& a) {
  if (m.op() == Op::Cover || m.op() == Op::Box || m.op() == Op::Diamond) return m.name() != a;
  for (Formula k : m.kids())
    if ((k.op() == Op::Cover || is_modal(k) || k.op() == Op::Not || k.op() == Op::And || k.op() == Op::Or) &&
        !member_alternating(k, a))
      return false;
  return true;
}

}  // namespace

std::shared_ptr<const Dnf> to_dnf(Formula f) {
  thread_local std::unordered_map<Formula, std::shared_ptr<const Dnf>, FormulaHash> memo;
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  auto d = build_dnf(nnf(f, false), [](Formula m) { return to_dnf(m); });
  memo.emplace(f, d);
  return d;
}

Formula flatten_k45(Formula f) { return flat(nnf(f, false)); }

std::shared_ptr<const Dnf> to_adnf(Formula f) {
  thread_local std::unordered_map<Formula, std::shared_ptr<const Dnf>, FormulaHash> memo;
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  auto d = build_dnf(flatten_k45(f), [](Formula m) { return to_adnf(m); });
  memo.emplace(f, d);
  return d;
}

Formula to_formula(const Dnf& d, bool alternating) {
  std::vector<Formula> out;
  for (const auto& c : d.clauses) {
    Formula clause = c.pi;
    for (const auto& [a, gamma] : c.covers) {
      std::vector<Formula> ms;
      for (Formula m : gamma) ms.push_back(to_formula(alternating ? *to_adnf(m) : *to_dnf(m), alternating));
      clause = mk_and(clause, cover(a, ms));
    }
    out.push_back(clause);
  }
  return disj_all(out);
}

bool is_alternating(Formula f) {
  if (f.op() == Op::Cover) {
    for (Formula m : f.kids())
      if (!member_alternating(m, f.name()) || !is_alternating(m)) return false;
    return true;
  }
  for (Formula k : f.kids())
    if (!is_alternating(k)) return false;
  return true;
}

// ---- S5 explicit formulae ---------------------------------------------------

namespace {

// Everything the explicit-form constructions need to know about one formula.
struct S5Analysis {
  Formula core;
  std::vector<Formula> free;  // atoms and boxes below the top-level modalities
  std::unordered_map<Formula, int, FormulaHash> index;
  std::map<std::string, std::vector<Formula>> top_bodies;
  AgentSet agents;
  std::vector<std::vector<char>> types;  // satisfiable assignments to `free`
};

void top_level(Formula g, std::map<std::string, FormulaSet>& bodies) {
  switch (g.op()) {
    case Op::Box: bodies[g.name()].insert(g.kid(0)); break;
    case Op::Not:
    case Op::And:
      for (Formula k : g.kids()) top_level(k, bodies);
      break;
    default: break;
  }
}

Formula literal(Formula x, bool v) { return v ? x : mk_not(x); }

Formula chi(const S5Analysis& an, const std::vector<char>& type) {
  std::vector<Formula> lits;
  for (std::size_t i = 0; i < an.free.size(); ++i) lits.push_back(literal(an.free[i], type[i]));
  return conj_all(lits);
}

bool eval_type(const S5Analysis& an, Formula g, const std::vector<char>& type) {
  switch (g.op()) {
    case Op::Top: return true;
    case Op::Bottom: return false;
    case Op::Not: return !eval_type(an, g.kid(0), type);
    case Op::And: return eval_type(an, g.kid(0), type) && eval_type(an, g.kid(1), type);
    default: return type[an.index.at(g)] != 0;
  }
}

S5Analysis analyse(Formula f) {
  S5Analysis an;
  an.core = to_core(f);
  an.agents = agents_of(f);
  std::map<std::string, FormulaSet> bodies;
  top_level(an.core, bodies);
  FormulaSet x;
  for (const auto& [a, bs] : bodies) {
    an.top_bodies[a] = std::vector<Formula>(bs.begin(), bs.end());
    for (Formula b : bs)
      for (Formula s : subformulae(b)) x.insert(s);
  }
  std::vector<Formula> atoms_first, boxes;
  for (Formula s : x) {
    if (s.op() == Op::Atom) atoms_first.push_back(s);
    if (s.op() == Op::Box) boxes.push_back(s);
  }
  std::stable_sort(boxes.begin(), boxes.end(), [](Formula a, Formula b) { return modal_depth(a) < modal_depth(b); });
  an.free = atoms_first;
  an.free.insert(an.free.end(), boxes.begin(), boxes.end());
  for (std::size_t i = 0; i < an.free.size(); ++i) an.index.emplace(an.free[i], static_cast<int>(i));

  // Depth-first enumeration of satisfiable assignments, pruning on partial ones.
  std::vector<char> cur;
  std::vector<Formula> lits;
  std::function<void()> go = [&]() {
    if (cur.size() == an.free.size()) {
      an.types.push_back(cur);
      return;
    }
    Formula e = an.free[cur.size()];
    for (bool v : {true, false}) {
      lits.push_back(literal(e, v));
      if (e.op() == Op::Atom || satisfiable(conj_all(lits), FrameClass::S5)) {
        cur.push_back(v ? 1 : 0);
        go();
        cur.pop_back();
      }
      lits.pop_back();
    }
  };
  go();
  return an;
}

// Residual of the core formula once T0 and the refuted top-level bodies are
// fixed; atoms outside the closure stay symbolic.
Formula residual(const S5Analysis& an, Formula g, const std::vector<char>& t0,
                 const std::map<std::string, FormulaSet>& refuted) {
  switch (g.op()) {
    case Op::Top:
    case Op::Bottom: return g;
    case Op::Atom: {
      auto it = an.index.find(g);
      return it == an.index.end() ? g : (t0[it->second] ? top() : bottom());
    }
    case Op::Not: return mk_not(residual(an, g.kid(0), t0, refuted));
    case Op::And: {
      Formula a = residual(an, g.kid(0), t0, refuted);
      if (a.op() == Op::Bottom) return a;
      return mk_and(a, residual(an, g.kid(1), t0, refuted));
    }
    case Op::Box: {
      auto it = refuted.find(g.name());
      return it != refuted.end() && it->second.count(g.kid(0)) ? bottom() : top();
    }
    default: throw Error("internal: unexpected operator in core formula");
  }
}

// One fixed choice of actual-world type and refuted bodies.
struct Profile {
  std::vector<char> t0;
  Formula pi;
  std::map<std::string, Formula> phi;                      // candidate condition per agent
  std::map<std::string, std::vector<Formula>> requirements;  // must be witnessed per agent
};

template <typename Visit>
void for_each_profile(const S5Analysis& an, Visit&& visit) {
  for (const auto& t0 : an.types) {
    // Per agent: forced refutations, and the bodies left to choose.
    std::vector<std::string> agents(an.agents.begin(), an.agents.end());
    std::map<std::string, FormulaSet> forced;
    std::vector<std::pair<std::string, Formula>> open;
    for (const auto& [a, bodies] : an.top_bodies)
      for (Formula th : bodies) {
        auto bi = an.index.find(box(a, th));
        if (bi != an.index.end()) {
          if (!t0[bi->second]) forced[a].insert(th);
        } else if (!eval_type(an, th, t0)) {
          forced[a].insert(th);
        } else {
          open.emplace_back(a, th);
        }
      }
    if (open.size() > 20) throw NotConverted("too many top-level modal bodies for the explicit form");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
      std::map<std::string, FormulaSet> refuted = forced;
      for (std::size_t i = 0; i < open.size(); ++i)
        if (mask >> i & 1) refuted[open[i].first].insert(open[i].second);
      Formula pi = residual(an, an.core, t0, refuted);
      if (pi.op() == Op::Bottom || !satisfiable(pi, FrameClass::S5)) continue;
      Profile p{t0, pi, {}, {}};
      bool ok = true;
      for (const auto& a : agents) {
        std::vector<Formula> conds, reqs;
        for (std::size_t i = 0; i < an.free.size(); ++i) {
          Formula e = an.free[i];
          if (e.op() != Op::Box || e.name() != a) continue;
          conds.push_back(literal(e, t0[i]));
          if (!t0[i]) reqs.push_back(e.kid(0));
        }
        auto tb = an.top_bodies.find(a);
        if (tb != an.top_bodies.end())
          for (Formula th : tb->second) {
            if (refuted[a].count(th))
              reqs.push_back(th);
            else
              conds.push_back(th);
          }
        Formula phi = conj_all(conds);
        FormulaSet uniq;
        for (Formula r : reqs) {
          Formula nu = mk_and(phi, mk_not(r));
          if (!satisfiable(nu, FrameClass::S5)) ok = false;
          uniq.insert(mk_not(r));
        }
        if (!ok) break;
        p.phi[a] = phi;
        p.requirements[a] = std::vector<Formula>(uniq.begin(), uniq.end());
      }
      if (ok) visit(p);
    }
  }
}

}  // namespace

std::vector<S5Witness> s5_witnesses(Formula f) {
  thread_local std::unordered_map<Formula, std::vector<S5Witness>, FormulaHash> memo;
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  S5Analysis an = analyse(f);
  std::vector<S5Witness> out;
  for_each_profile(an, [&](const Profile& p) {
    S5Witness w{p.pi, chi(an, p.t0), {}};
    for (const auto& [a, reqs] : p.requirements) {
      std::vector<Formula> needs{w.gamma0};
      for (Formula r : reqs) needs.push_back(mk_and(p.phi.at(a), r));
      w.needs[a] = needs;
    }
    out.push_back(std::move(w));
  });
  memo.emplace(f, out);
  return out;
}

Formula to_formula(const ExplicitFormula& e) {
  // Raw conjunctions keep a true pi or gamma0 visible to is_explicit.
  Formula out = conj(e.pi, e.gamma0);
  for (const auto& [a, gamma] : e.covers) out = conj(out, cover(a, gamma));
  return out;
}

namespace {

void conjuncts(Formula f, std::vector<Formula>& out) {
  if (f.op() == Op::And) {
    conjuncts(f.kid(0), out);
    conjuncts(f.kid(1), out);
  } else {
    out.push_back(f);
  }
}

// Every way of reading f as pi & gamma0 & covers.  gamma0 may itself be a
// conjunction, so any node of the conjunction tree is a candidate.
std::vector<ExplicitFormula> decompositions(Formula f) {
  std::vector<Formula> cs;
  conjuncts(f, cs);
  std::map<std::string, std::vector<Formula>> covers;
  for (Formula c : cs)
    if (c.op() == Op::Cover) {
      if (covers.count(c.name())) return {};
      covers[c.name()] = c.kids();
    }
  // Leaves of the conjunction tree below n, covers excluded.
  std::function<void(Formula, Formula, std::vector<Formula>&)> leaves = [&](Formula n, Formula skip,
                                                                            std::vector<Formula>& out) {
    if (n == skip) return;
    if (n.op() == Op::And) {
      leaves(n.kid(0), skip, out);
      leaves(n.kid(1), skip, out);
    } else if (n.op() != Op::Cover) {
      out.push_back(n);
    }
  };
  std::vector<Formula> nodes;
  std::function<void(Formula)> walk = [&](Formula n) {
    if (n.op() == Op::Cover) return;
    nodes.push_back(n);
    if (n.op() == Op::And) {
      walk(n.kid(0));
      walk(n.kid(1));
    }
  };
  walk(f);
  std::vector<ExplicitFormula> out;
  for (Formula g0 : nodes) {
    bool in_all = true;
    for (const auto& [a, gamma] : covers) in_all = in_all && std::find(gamma.begin(), gamma.end(), g0) != gamma.end();
    if (!in_all) continue;
    std::vector<Formula> pis;
    leaves(f, g0, pis);
    bool prop = true;
    for (Formula x : pis) prop = prop && is_propositional(x);
    if (prop) out.push_back(ExplicitFormula{conj_all(pis), g0, covers});
  }
  return out;
}

void disjuncts(Formula f, std::vector<Formula>& out) {
  if (f.op() == Op::Or) {
    disjuncts(f.kid(0), out);
    disjuncts(f.kid(1), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

bool is_explicit(const ExplicitFormula& e) {
  if (!is_propositional(e.pi)) throw InputError("pi must be propositional");
  for (const auto& [a, gamma] : e.covers)
    if (std::find(gamma.begin(), gamma.end(), e.gamma0) == gamma.end())
      throw InputError("gamma0 is missing from the cover of agent '" + a + "'");
  FormulaSet psi;
  for (const auto& [a, gamma] : e.covers)
    for (Formula g : gamma)
      for (Formula s : subformulae(g)) psi.insert(s);
  if (e.covers.empty())
    for (Formula s : subformulae(e.gamma0)) psi.insert(s);
  auto entails = [](Formula g, Formula h) { return valid(implies(g, h), FrameClass::S5); };
  for (const auto& [a, gamma] : e.covers)
    for (Formula g : gamma) {
      for (Formula s : psi)
        if (!entails(g, s) && !entails(g, neg(s))) return false;
      for (Formula s : psi) {
        if (s.op() != Op::Box || s.name() != a) continue;
        bool all = true;
        for (Formula g2 : gamma) all = all && entails(g2, s.kid(0));
        if (entails(g, s) != all) return false;
      }
    }
  return true;
}

bool is_explicit(Formula f) {
  auto ds = decompositions(f);
  if (ds.empty()) throw InputError("formula is not of the form pi & gamma0 & covers with gamma0 in every cover");
  for (const auto& d : ds)
    if (is_explicit(d)) return true;
  return false;
}

std::vector<ExplicitFormula> to_explicit(Formula f, std::size_t budget) {
  if (!is_basic(f)) throw InputError("to_explicit expects a basic formula");
  // Inputs that already are disjunctions of explicit formulae come back as is.
  {
    std::vector<Formula> ds;
    disjuncts(f, ds);
    std::vector<ExplicitFormula> same;
    for (Formula d : ds) {
      for (const auto& e : decompositions(d))
        if (!e.covers.empty() && is_explicit(e)) {
          same.push_back(e);
          break;
        }
    }
    if (same.size() == ds.size()) return same;
  }

  S5Analysis an = analyse(f);
  std::size_t spent = 0;
  auto charge = [&](std::size_t n) {
    spent += n;
    if (spent > budget) throw NotConverted("explicit form exceeds the budget of " + std::to_string(budget) + " steps");
  };
  std::vector<ExplicitFormula> out;
  for_each_profile(an, [&](const Profile& p) {
    Formula g0 = chi(an, p.t0);
    // Valid covers per agent: sets of candidate types containing T0 that
    // witness every requirement.
    std::vector<std::pair<std::string, std::vector<std::vector<Formula>>>> per_agent;
    for (const auto& [a, phi] : p.phi) {
      std::vector<const std::vector<char>*> cands;
      for (const auto& u : an.types)
        if (u != p.t0 && eval_type(an, to_core(phi), u)) cands.push_back(&u);
      if (cands.size() > 24) throw NotConverted("too many candidate types for an explicit cover");
      std::vector<std::vector<Formula>> valid_covers;
      const auto& reqs = p.requirements.at(a);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cands.size()); ++mask) {
        charge(1);
        std::vector<const std::vector<char>*> members{&p.t0};
        for (std::size_t i = 0; i < cands.size(); ++i)
          if (mask >> i & 1) members.push_back(cands[i]);
        bool hit_all = true;
        for (Formula r : reqs) {
          bool hit = false;
          for (const auto* u : members) hit = hit || eval_type(an, to_core(r), *u);
          hit_all = hit_all && hit;
        }
        if (!hit_all) continue;
        std::vector<Formula> gamma;
        for (const auto* u : members) gamma.push_back(chi(an, *u));
        valid_covers.push_back(std::move(gamma));
      }
      per_agent.emplace_back(a, std::move(valid_covers));
    }
    std::vector<std::map<std::string, std::vector<Formula>>> combos{{}};
    for (const auto& [a, options] : per_agent) {
      std::vector<std::map<std::string, std::vector<Formula>>> next;
      for (const auto& c : combos)
        for (const auto& gamma : options) {
          charge(1);
          auto d = c;
          d[a] = gamma;
          next.push_back(std::move(d));
        }
      combos = std::move(next);
    }
    for (auto& c : combos) out.push_back(ExplicitFormula{p.pi, g0, std::move(c)});
  });
  return out;
}

}  // namespace aafl
