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

#ifndef GPDB_STABLE_HPP
#define GPDB_STABLE_HPP

#include <vector>

#include "gpdb/fixpoint.hpp"
#include "gpdb/formula_function.hpp"
#include "gpdb/ground.hpp"
#include "gpdb/interval.hpp"

namespace gpdb {

// One distinct ground negated annotated literal of the program. The
// program-threshold transform depends on a guess h only through which of
// these literals h satisfies, which quotients the uncountable guess space
// into 2^k finite cases.
struct BlockingKey {
  BasicFormula formula;
  Interval bound;
};

int compare(const BlockingKey& a, const BlockingKey& b);

// Which negated literals a guess satisfies ("blocks"), aligned with
// blocking_keys(g). A blocked key deletes every clause that contains the
// corresponding negated literal.
struct BlockingVector {
  std::vector<bool> blocked;

  bool operator==(const BlockingVector& o) const { return blocked == o.blocked; }
};

// The distinct negated literals of g, deterministically ordered.
std::vector<BlockingKey> blocking_keys(const GroundProgram& g);

// blocked[i] iff h(G_i) is a subset of the key's bound.
BlockingVector blocking_of(const GroundProgram& g, const FormulaFunction& h);

// The Gelfond-Lifschitz-style reduction: keeps exactly the clauses whose
// negated literals are all unblocked, with those literals stripped. The
// result is negation-free and inherits g's base and tracked set.
GroundProgram ff_transform(const GroundProgram& g, const BlockingVector& bv);

// The stability operator: least fixpoint of the transform selected by h.
FormulaFunction sfp(const GroundProgram& g, const FormulaFunction& h, const Limits& limits = {},
                    EvalStats* stats = nullptr);

// h is stable iff it reproduces itself through its own transform.
bool is_stable(const GroundProgram& g, const FormulaFunction& h, const Limits& limits = {},
               EvalStats* stats = nullptr);

// All stable formula functions, found by trying every blocking vector and
// keeping the candidates whose own blocking matches the generating vector.
// Sorted and deduplicated. Throws BudgetError when the key count exceeds
// limits.max_neg.
std::vector<FormulaFunction> enumerate_stable_functions(const GroundProgram& g,
                                                        const Limits& limits = {},
                                                        EvalStats* stats = nullptr);

// A finite set of formula functions equal to its own image under sfp.
// Canonically ordered and deduplicated.
class StableClass {
 public:
  explicit StableClass(std::vector<FormulaFunction> members);

  const std::vector<FormulaFunction>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool operator==(const StableClass& o) const { return members_ == o.members_; }

 private:
  std::vector<FormulaFunction> members_;
};

int compare(const StableClass& a, const StableClass& b);

// Iterates sfp from ⊥ and returns the first cycle reached. By the
// anti-monotonicity of sfp this always exists, so every program gets a
// non-empty stable class.
StableClass alternating_class(const GroundProgram& g, const Limits& limits = {},
                              EvalStats* stats = nullptr);

// All inclusion-minimal stable classes: sfp restricted to the finite set of
// transform fixpoint candidates is a total function whose cycles are exactly
// the minimal classes.
std::vector<StableClass> minimal_stable_classes(const GroundProgram& g,
                                                const Limits& limits = {},
                                                EvalStats* stats = nullptr);

// Power-domain liftings of the formula-function order to classes.
bool leq_smyth(const StableClass& s1, const StableClass& s2);
bool leq_hoare(const StableClass& s1, const StableClass& s2);

// The classes minimal under the respective ordering among the given
// inclusion-minimal classes.
std::vector<StableClass> hoare_minimal(const std::vector<StableClass>& classes);
std::vector<StableClass> smyth_minimal(const std::vector<StableClass>& classes);

}  // namespace gpdb

#endif  // GPDB_STABLE_HPP
