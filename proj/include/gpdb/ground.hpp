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

#ifndef GPDB_GROUND_HPP
#define GPDB_GROUND_HPP

#include <cstddef>
#include <vector>

#include "gpdb/ast.hpp"
#include "gpdb/errors.hpp"

namespace gpdb {

// A program with all object variables instantiated, together with its
// Herbrand base and the ordered set of tracked basic formulas. Evaluation is
// restricted to the tracked set: a formula outside it implicitly carries
// [0,1], contributes no linear constraint, and its consequence-operator value
// is exactly the LP optimum it would have been assigned anyway, so the
// restriction does not change any tracked result.
struct GroundProgram {
  std::vector<GpClause> clauses;       // no object variables left
  std::vector<Atom> base;              // sorted, deterministic
  std::vector<BasicFormula> tracked;   // sorted canonical ground formulas
  bool pf = true;                      // no clause has negated literals

  std::size_t atom_index(const Atom& a) const;             // throws if absent
  std::size_t tracked_index(const BasicFormula& f) const;  // throws if absent
  bool in_base(const Atom& a) const;
};

// All ground atoms constructible from the program's predicates and constants,
// in lexicographic order. Throws BudgetError when the base would exceed
// limits.max_atoms, and std::invalid_argument when a predicate of positive
// arity exists but the program has no constants.
std::vector<Atom> herbrand_base(const GpProgram& p, const Limits& limits = {});

// Instantiates every clause with all substitutions of object variables by
// program constants and computes the tracked formula set.
GroundProgram ground_program(const GpProgram& p, const Limits& limits = {});

// Union of the program's tracked formulas and the given extra (query)
// formulas, canonical and deterministically ordered. Extras must be ground
// and mention only base atoms.
std::vector<BasicFormula> tracked_formulas(const GroundProgram& g,
                                           const std::vector<BasicFormula>& extra);

// Copy of g whose tracked set additionally contains the given formulas.
GroundProgram with_extra_tracked(const GroundProgram& g,
                                 const std::vector<BasicFormula>& extra);

}  // namespace gpdb

#endif  // GPDB_GROUND_HPP
