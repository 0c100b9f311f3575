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

#ifndef AAFL_REDUCE_HPP_
#define AAFL_REDUCE_HPP_

#include <cstddef>

#include "aafl/action.hpp"
#include "aafl/syntax.hpp"

namespace aafl {

inline constexpr std::size_t kDefaultReduceBudget = 20'000'000;

// Equivalent basic formula in class c.  Dynamic operators go through tau and
// the action-model reduction axioms, refinement quantifiers through the
// class's normal form.  Throws NotConverted or ResourceExhausted.
Formula reduce(Formula f, FrameClass c, std::size_t budget = kDefaultReduceBudget);

// Rewrites dynamic operators with the learning-formula axioms of class K.
// Refinement quantifiers are rejected with InputError.
Formula reduce_afl_fastpath(Formula f, FrameClass c = FrameClass::K);

// [A, designated] post and <A, t> post for basic post, by the action-model
// reduction axioms.  The results are basic when every precondition is.
Formula action_box(const PointedActionModel& a, Formula post);
Formula action_diamond_at(const PointedActionModel& a, int point, Formula post);

// The refinement quantifier applied to a basic formula.
Formula reduce_exists(Formula f, FrameClass c);

// Normalizer for seq_compose that reduces <A, t> post to a basic formula.
Normalizer reducing_normalizer(FrameClass c);

}  // namespace aafl

#endif  // AAFL_REDUCE_HPP_
