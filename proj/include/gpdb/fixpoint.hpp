// Copyright 2026 The gpdb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPDB_FIXPOINT_HPP
#define GPDB_FIXPOINT_HPP

#include "gpdb/errors.hpp"
#include "gpdb/formula_function.hpp"
#include "gpdb/ground.hpp"

namespace gpdb {

// Counters reported by the CLI; optional everywhere.
struct EvalStats {
  long lp_calls = 0;
  long iterations = 0;
  long infeasible_steps = 0;
};

// One clause-level deduction step: for each tracked formula, intersect the
// evaluated head annotations of all applicable clauses (or [0,1] when none
// applies). A clause is applicable when
//   - its annotation variables bind consistently: a bare variable in a
//     positive literal's annotation binds to the matching endpoint of the
//     literal's current value, so [V, V] demands a point interval and two
//     occurrences of one variable must agree;
//   - every positive literal's value is contained in its evaluated
//     annotation (a positive literal with an empty value and a variable in
//     its annotation makes the clause contribute the empty interval
//     directly, since every instance fires);
//   - with negation_aware set, no negated literal's value is contained in
//     its (variable-free) annotation.
// With negation_aware unset the program must be negation-free.
FormulaFunction sp_step(const GroundProgram& g, const FormulaFunction& h, bool negation_aware);

// The LP-tightened consequence operator: bounds every tracked formula by the
// minimum and maximum of its world-probability sum over LC(sp_step(h)). When
// that system is infeasible, every tracked formula maps to the empty
// interval.
FormulaFunction tp_step(const GroundProgram& g, const FormulaFunction& h, bool negation_aware,
                        EvalStats* stats = nullptr);

// Least fixpoint of tp_step from ⊥, for negation-free programs. Throws
// NegationError when the program has negated literals and DivergenceError
// when max_iters is exceeded.
FormulaFunction lfp(const GroundProgram& g, const Limits& limits = {},
                    EvalStats* stats = nullptr);

// True iff h is a fixpoint of the negation-aware operator.
bool is_fixpoint(const GroundProgram& g, const FormulaFunction& h, EvalStats* stats = nullptr);

}  // namespace gpdb

#endif  // GPDB_FIXPOINT_HPP
