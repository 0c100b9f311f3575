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

#ifndef AAFL_SYNTAX_HPP_
#define AAFL_SYNTAX_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aafl/common.hpp"

namespace aafl {

enum class Op : std::uint8_t {
  Top,
  Bottom,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Box,
  Diamond,
  Cover,
  DynBox,
  DynDiamond,
  RefBox,
  RefDiamond,
};

enum class ActOp : std::uint8_t { Test, Choice, Compose, Learn };

struct FormulaNode;
struct ActionNode;
class Action;

// Formulas and actions are hash-consed: structurally equal terms share one
// node, so equality and hashing are pointer operations.  Nodes live for the
// whole process and are never mutated.
class Formula {
 public:
  Formula() = default;
  explicit Formula(const FormulaNode* n) : n_(n) {}

  Op op() const;
  // Atom name for Atom, agent name for Box/Diamond/Cover, empty otherwise.
  const std::string& name() const;
  const std::vector<Formula>& kids() const;
  Formula kid(std::size_t i = 0) const { return kids()[i]; }
  // The action of a DynBox/DynDiamond.
  Action action() const;
  std::uint64_t id() const;
  std::size_t hash() const;
  bool valid() const { return n_ != nullptr; }
  const FormulaNode* node() const { return n_; }

  friend bool operator==(Formula a, Formula b) { return a.n_ == b.n_; }
  friend bool operator!=(Formula a, Formula b) { return a.n_ != b.n_; }

 private:
  const FormulaNode* n_ = nullptr;
};

class Action {
 public:
  Action() = default;
  explicit Action(const ActionNode* n) : n_(n) {}

  ActOp op() const;
  const std::vector<Action>& kids() const;
  Action kid(std::size_t i = 0) const { return kids()[i]; }
  Formula test() const;
  const AgentSet& agents() const;
  std::uint64_t id() const;
  std::size_t hash() const;
  bool valid() const { return n_ != nullptr; }

  friend bool operator==(Action a, Action b) { return a.n_ == b.n_; }
  friend bool operator!=(Action a, Action b) { return a.n_ != b.n_; }

 private:
  const ActionNode* n_ = nullptr;
};

// Structural total order, stable across runs (unlike id order).
int compare(Formula a, Formula b);
int compare(Action a, Action b);

struct FormulaLess {
  bool operator()(Formula a, Formula b) const { return compare(a, b) < 0; }
};
struct FormulaHash {
  std::size_t operator()(Formula f) const { return f.hash(); }
};
struct ActionHash {
  std::size_t operator()(Action a) const { return a.hash(); }
};

using FormulaSet = std::set<Formula, FormulaLess>;

// Raw constructors: build exactly the requested node.
Formula top();
Formula bottom();
Formula atom(std::string_view name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula box(std::string_view agent, Formula f);
Formula diamond(std::string_view agent, Formula f);
// Members are deduplicated and stored in structural order.
Formula cover(std::string_view agent, std::vector<Formula> members);
Formula dyn_box(Action a, Formula f);
Formula dyn_diamond(Action a, Formula f);
Formula ref_box(Formula f);
Formula ref_diamond(Formula f);

Action test(Formula f);
Action choice(Action a, Action b);
Action compose(Action a, Action b);
// Throws InputError when agents is empty.
Action learn(AgentSet agents, Action a, Action b);
inline Action learn(AgentSet agents, Action a) { return learn(std::move(agents), a, a); }

// Constructors with constant folding of true/false (and nothing else).
Formula mk_not(Formula f);
Formula mk_and(Formula a, Formula b);
Formula mk_or(Formula a, Formula b);
Formula mk_implies(Formula a, Formula b);
Formula mk_iff(Formula a, Formula b);
Formula mk_box(std::string_view agent, Formula f);
Formula mk_diamond(std::string_view agent, Formula f);
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);
// Left-nested choice / composition; both require a non-empty list.
Action choice_all(const std::vector<Action>& as);
Action compose_all(const std::vector<Action>& as);

Formula parse_formula(std::string_view text, const AgentSet& agents);
Action parse_action(std::string_view text, const AgentSet& agents);
std::string print_formula(Formula f);
std::string print_action(Action a);

bool is_basic(Formula f);
bool is_propositional(Formula f);
bool is_basic(Action a);

// Throws InputError on non-basic input.
int modal_depth(Formula f);
Formula expand_cover(std::string_view agent, const std::vector<Formula>& gamma);
bool is_b_restricted(Formula f, const AgentSet& b);
FormulaSet subformulae(Formula f);

std::set<std::string> atoms_of(Formula f);
std::set<std::string> atoms_of(Action a);
AgentSet agents_of(Formula f);
AgentSet agents_of(Action a);
// Tree size; shared subterms are counted at every occurrence.
std::size_t size(Formula f);

// Rewrite into atoms, true, false, ~, & and [a] only (basic input).
Formula to_core(Formula f);

}  // namespace aafl

#endif  // AAFL_SYNTAX_HPP_
