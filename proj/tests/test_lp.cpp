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

#include "gpdb/lp.hpp"

#include <doctest.h>

#include "gpdb/formula_function.hpp"
#include "gpdb/worlds.hpp"
#include "support/gen.hpp"
#include "support/vertex_oracle.hpp"

using namespace gpdb;
using gpdb::testing::oracle_optimize;
using gpdb::testing::prop_atom;
using gpdb::testing::synthetic_ground;

namespace {

BasicFormula conj(std::vector<int> ids) {
  std::vector<Atom> atoms;
  for (int i : ids) atoms.push_back(prop_atom(i));
  return BasicFormula(Connective::Conj, std::move(atoms));
}

BasicFormula disj(std::vector<int> ids) {
  std::vector<Atom> atoms;
  for (int i : ids) atoms.push_back(prop_atom(i));
  return BasicFormula(Connective::Disj, std::move(atoms));
}

// P(p0) in [0.5, 0.7], P(p1) in [0.6, 0.8] over a two-atom base.
ConstraintSystem frechet_system(const GroundProgram& g) {
  FormulaFunction h = FormulaFunction::bottom(g);
  h.set(g.tracked_index(conj({0})), Interval::closed(Rational(1, 2), Rational(7, 10)));
  h.set(g.tracked_index(conj({1})), Interval::closed(Rational(3, 5), Rational(4, 5)));
  return build_constraints(g, h);
}

}  // namespace

TEST_CASE("conjunction bounds match the Fréchet bounds") {
  const GroundProgram g = synthetic_ground(2, {conj({0}), conj({1}), conj({0, 1})});
  const ConstraintSystem cs = frechet_system(g);
  const Objective obj{satisfying_worlds(conj({0, 1}), g)};

  const LpOutcome lo = minimize(cs, obj);
  const LpOutcome hi = maximize(cs, obj);
  REQUIRE(lo.status == LpStatus::Feasible);
  REQUIRE(hi.status == LpStatus::Feasible);
  // max(0, 0.5 + 0.6 - 1) and min(0.7, 0.8)
  CHECK(lo.value == Rational(1, 10));
  CHECK(hi.value == Rational(7, 10));

  // witnesses satisfy the rows and reproduce the optimum
  CHECK(witness_satisfies(cs, lo.witness));
  CHECK(witness_satisfies(cs, hi.witness));
  CHECK(objective_value(obj, lo.witness) == lo.value);
  CHECK(objective_value(obj, hi.witness) == hi.value);

  // independent oracle agrees exactly
  const auto oracle = oracle_optimize(cs, obj);
  REQUIRE(oracle.feasible);
  CHECK(oracle.min == lo.value);
  CHECK(oracle.max == hi.value);
}

TEST_CASE("unconstrained single atom spans the whole unit interval") {
  const GroundProgram g = synthetic_ground(2, {conj({0})});
  const ConstraintSystem cs = build_constraints(g, FormulaFunction::bottom(g));
  const Objective obj{satisfying_worlds(conj({0}), g)};
  CHECK(minimize(cs, obj).value == Rational(0));
  CHECK(maximize(cs, obj).value == Rational(1));
  CHECK(feasible(cs));
}

TEST_CASE("a point bound forces the objective") {
  const GroundProgram g = synthetic_ground(1, {conj({0})});
  FormulaFunction h = FormulaFunction::bottom(g);
  h.set(0, Interval::closed(Rational(1), Rational(1)));
  const ConstraintSystem cs = build_constraints(g, h);
  const Objective obj{satisfying_worlds(conj({0}), g)};
  CHECK(minimize(cs, obj).value == Rational(1));
  CHECK(maximize(cs, obj).value == Rational(1));
}

TEST_CASE("locally consistent but globally inconsistent bounds are infeasible") {
  // P(A) = P(B) = 1 but P(A or B) = 0
  const GroundProgram g = synthetic_ground(2, {conj({0}), conj({1}), disj({0, 1})});
  FormulaFunction h = FormulaFunction::bottom(g);
  h.set(g.tracked_index(conj({0})), Interval::point(Rational(1)));
  h.set(g.tracked_index(conj({1})), Interval::point(Rational(1)));
  h.set(g.tracked_index(disj({0, 1})), Interval::point(Rational(0)));
  const ConstraintSystem cs = build_constraints(g, h);
  CHECK_FALSE(feasible(cs));
  CHECK(minimize(cs, Objective{satisfying_worlds(conj({0}), g)}).status ==
        LpStatus::Infeasible);
  CHECK_FALSE(oracle_optimize(cs, Objective{satisfying_worlds(conj({0}), g)}).feasible);
}

TEST_CASE("an empty value makes the system infeasible") {
  const GroundProgram g = synthetic_ground(2, {conj({0})});
  FormulaFunction h = FormulaFunction::bottom(g);
  h.set(0, Interval::empty());
  CHECK_FALSE(feasible(build_constraints(g, h)));
}

TEST_CASE("batched ranges equal per-objective solves") {
  gpdb::testing::Rng rng(7401);
  for (int trial = 0; trial < 40; ++trial) {
    const int natoms = rng.int_in(1, 3);
    std::vector<BasicFormula> tracked;
    const int nf = rng.int_in(1, 3);
    for (int i = 0; i < nf; ++i) tracked.push_back(gpdb::testing::random_formula(rng, natoms));
    const GroundProgram g = synthetic_ground(natoms, tracked);
    FormulaFunction h = FormulaFunction::bottom(g);
    for (std::size_t i = 0; i < g.tracked.size(); ++i)
      if (rng.chance(70)) h.set(i, rng.interval());
    const ConstraintSystem cs = build_constraints(g, h);

    std::vector<Objective> objs;
    for (const BasicFormula& f : g.tracked) objs.push_back(Objective{satisfying_worlds(f, g)});
    const auto batched = optimize_ranges(cs, objs);
    if (!batched) {
      CHECK_FALSE(feasible(cs));
      continue;
    }
    for (std::size_t i = 0; i < objs.size(); ++i) {
      CHECK((*batched)[i].min == minimize(cs, objs[i]).value);
      CHECK((*batched)[i].max == maximize(cs, objs[i]).value);
    }
  }
}

TEST_CASE("simplex agrees exactly with the vertex oracle on random systems") {
  gpdb::testing::Rng rng(7402);
  int feasible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int natoms = rng.int_in(1, 3);
    std::vector<BasicFormula> tracked;
    const int nf = rng.int_in(1, 2);
    for (int i = 0; i < nf; ++i) tracked.push_back(gpdb::testing::random_formula(rng, natoms));
    const GroundProgram g = synthetic_ground(natoms, tracked);
    FormulaFunction h = FormulaFunction::bottom(g);
    for (std::size_t i = 0; i < g.tracked.size(); ++i) h.set(i, rng.interval());
    const ConstraintSystem cs = build_constraints(g, h);
    const BasicFormula qf = gpdb::testing::random_formula(rng, natoms);
    const Objective obj{satisfying_worlds(qf, g)};

    const auto oracle = oracle_optimize(cs, obj);
    const LpOutcome lo = minimize(cs, obj);
    const LpOutcome hi = maximize(cs, obj);
    CHECK(oracle.feasible == (lo.status == LpStatus::Feasible));
    if (!oracle.feasible) continue;
    ++feasible_seen;
    CHECK(lo.value == oracle.min);
    CHECK(hi.value == oracle.max);
    CHECK(lo.value <= hi.value);
    CHECK(witness_satisfies(cs, lo.witness));
    CHECK(witness_satisfies(cs, hi.witness));
  }
  CHECK(feasible_seen > 30);  // the generator must exercise the feasible path
}

TEST_CASE("re-adding derived bounds leaves other optima unchanged") {
  // Tightening a formula to its own LP range does not cut the polytope as
  // seen by any other tracked objective.
  gpdb::testing::Rng rng(7403);
  for (int trial = 0; trial < 25; ++trial) {
    const int natoms = rng.int_in(2, 3);
    std::vector<BasicFormula> tracked;
    for (int i = 0; i < 3; ++i) tracked.push_back(gpdb::testing::random_formula(rng, natoms));
    const GroundProgram g = synthetic_ground(natoms, tracked);
    FormulaFunction h = FormulaFunction::bottom(g);
    for (std::size_t i = 0; i < g.tracked.size(); ++i)
      if (rng.chance(50)) h.set(i, rng.interval());
    const ConstraintSystem cs = build_constraints(g, h);

    std::vector<Objective> objs;
    for (const BasicFormula& f : g.tracked) objs.push_back(Objective{satisfying_worlds(f, g)});
    const auto before = optimize_ranges(cs, objs);
    if (!before) continue;

    // pick one formula, pin it to its derived range, re-solve the others
    const std::size_t pick =
        static_cast<std::size_t>(rng.int_in(0, static_cast<int>(g.tracked.size()) - 1));
    FormulaFunction h2 = h;
    h2.set(pick, Interval::closed((*before)[pick].min, (*before)[pick].max));
    const auto after = optimize_ranges(build_constraints(g, h2), objs);
    REQUIRE(after.has_value());
    for (std::size_t i = 0; i < objs.size(); ++i) {
      CHECK((*after)[i].min == (*before)[i].min);
      CHECK((*after)[i].max == (*before)[i].max);
    }
  }
}
