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

#ifndef GPDB_LP_HPP
#define GPDB_LP_HPP

#include <optional>
#include <vector>

#include "gpdb/rational.hpp"
#include "gpdb/worlds.hpp"

namespace gpdb {

// A world-sum objective: the value optimized is the total probability of the
// masked worlds.
struct Objective {
  WorldMask worlds;
};

enum class LpStatus { Feasible, Infeasible };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;                  // optimum, when feasible
  std::vector<Rational> witness;   // world probabilities achieving it
};

// Exact-rational linear programming over a ConstraintSystem: primal simplex
// on the explicit tableau with Bland's anti-cycling rule and a two-phase
// start. Unboundedness cannot occur (the feasible set lies inside the
// probability simplex); it is reported as std::logic_error if it ever does.
bool feasible(const ConstraintSystem& cs);
LpOutcome minimize(const ConstraintSystem& cs, const Objective& obj);
LpOutcome maximize(const ConstraintSystem& cs, const Objective& obj);

struct RangeResult {
  Rational min;
  Rational max;
};

// Minimum and maximum for each objective over one system, sharing a single
// phase-one start and warm-starting phase two between objectives. Returns
// nothing when the system is infeasible. Results are identical to calling
// minimize/maximize per objective.
std::optional<std::vector<RangeResult>> optimize_ranges(const ConstraintSystem& cs,
                                                        const std::vector<Objective>& objs);

// Checks a candidate solution against every row of the system (exact).
bool witness_satisfies(const ConstraintSystem& cs, const std::vector<Rational>& x);

// Direct evaluation of an objective at a point.
Rational objective_value(const Objective& obj, const std::vector<Rational>& x);

}  // namespace gpdb

#endif  // GPDB_LP_HPP
