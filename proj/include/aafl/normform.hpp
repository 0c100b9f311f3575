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

#ifndef AAFL_NORMFORM_HPP_
#define AAFL_NORMFORM_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aafl/syntax.hpp"

namespace aafl {

// One disjunct pi & Cov{a}(...) & ...  Cover members are kept as plain
// formulas and are normalised on demand (to_formula renders them fully).
struct DnfClause {
  Formula pi;
  std::map<std::string, std::vector<Formula>> covers;
};

struct Dnf {
  std::vector<DnfClause> clauses;  // empty means false
};

// Normal forms for K and, after a-flattening, the alternating form for K45.
// Results are cached per formula.
std::shared_ptr<const Dnf> to_dnf(Formula f);
std::shared_ptr<const Dnf> to_adnf(Formula f);
// Fully rendered normal form, members included.
Formula to_formula(const Dnf& d, bool alternating = false);

// In K45 a-modal formulas have one truth value across every a-successor, so
// such subformulas can be lifted out of a-boxes.  The result has no a-modal
// formula at the top level of any a-modal body.
Formula flatten_k45(Formula f);

// True when no cover member has a top-level cover of its own agent.
bool is_alternating(Formula f);

struct ExplicitFormula {
  Formula pi;
  Formula gamma0;
  std::map<std::string, std::vector<Formula>> covers;  // each contains gamma0
};

Formula to_formula(const ExplicitFormula& e);

inline constexpr std::size_t kDefaultExplicitBudget = 20'000;

// Disjunction of explicit formulas equivalent to f in S5 (empty for an
// unsatisfiable f).  Throws NotConverted when more than `budget` candidate
// disjuncts would have to be examined.
std::vector<ExplicitFormula> to_explicit(Formula f, std::size_t budget = kDefaultExplicitBudget);

// Checks both explicitness conditions with the S5 prover.  The Formula
// overload first splits f into pi, gamma0 and covers and throws InputError
// when that shape is missing.
bool is_explicit(const ExplicitFormula& e);
bool is_explicit(Formula f);

// Grouped form of the explicit disjuncts of f used by the refinement
// quantifier and by synthesis in S5.  Each entry stands for every explicit
// disjunct with actual-world type gamma0 in which, for each agent a, the
// a-class realises gamma0 and at least one type satisfying each formula in
// needs[a] (needs[a][0] is gamma0 itself).  f is equivalent under the
// refinement quantifier to the disjunction of
//   pi & gamma0 & AND_a AND_{nu in needs[a]} <a> nu.
struct S5Witness {
  Formula pi;
  Formula gamma0;
  std::map<std::string, std::vector<Formula>> needs;
};

std::vector<S5Witness> s5_witnesses(Formula f);

}  // namespace aafl

#endif  // AAFL_NORMFORM_HPP_
