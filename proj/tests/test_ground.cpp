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

#include "gpdb/ground.hpp"

#include <doctest.h>

#include <set>

#include "gpdb/fixpoint.hpp"
#include "gpdb/parser.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace gpdb;
using gpdb::testing::load_fixture;

TEST_CASE("herbrand base of the dogs program") {
  // 3 unary predicates x 2 constants
  const auto base = herbrand_base(load_fixture("ex03.gp"));
  CHECK(base.size() == 6);
  std::set<std::string> names;
  for (const Atom& a : base) names.insert(a.to_string());
  CHECK(names == std::set<std::string>{"abn(benjy)", "abn(fido)", "bark(benjy)", "bark(fido)",
                                       "dog(benjy)", "dog(fido)"});
}

TEST_CASE("propositional programs are their own base") {
  CHECK(herbrand_base(load_fixture("ex05.gp")).size() == 2);
}

TEST_CASE("binary predicates take all constant pairs") {
  const auto base = herbrand_base(parse_program("r(a, b) : [1, 1]."));
  CHECK(base.size() == 4);  // 2^2 argument combinations
}

TEST_CASE("atom budget is enforced") {
  Limits tight;
  tight.max_atoms = 5;
  CHECK_THROWS_AS(herbrand_base(load_fixture("ex03.gp"), tight), BudgetError);
  CHECK_THROWS_AS(ground_program(load_fixture("ex03.gp"), tight), BudgetError);
}

TEST_CASE("positive arity with no constants is an error") {
  CHECK_THROWS_AS(herbrand_base(parse_program("p(X) : [1, 1] <- q(X) : [1, 1].")),
                  std::invalid_argument);
}

TEST_CASE("grounding instantiates every substitution") {
  // bark rule x2, abn rule x2, three facts
  const GroundProgram g3 = ground_program(load_fixture("ex03.gp"));
  CHECK(g3.clauses.size() == 7);
  CHECK_FALSE(g3.pf);

  const GroundProgram g5 = ground_program(load_fixture("ex05.gp"));
  CHECK(g5.clauses.size() == 1);

  const GroundProgram g11 = ground_program(load_fixture("ex11.gp"));
  CHECK(g11.clauses.size() == 4);

  for (const GpClause& c : g3.clauses) CHECK(c.object_variables().empty());
}

TEST_CASE("tracked formulas cover exactly the ground program") {
  const GroundProgram g5 = ground_program(load_fixture("ex05.gp"));
  REQUIRE(g5.tracked.size() == 2);
  CHECK(g5.tracked[0].to_string() == "p");
  CHECK(g5.tracked[1].to_string() == "q");

  const GroundProgram g3 = ground_program(load_fixture("ex03.gp"));
  CHECK(g3.tracked.size() == 6);  // six ground atoms, no compound formulas
}

TEST_CASE("extra query formulas join the tracked set") {
  const GroundProgram g = ground_program(load_fixture("ex05.gp"));
  const BasicFormula pq(Connective::Conj,
                        {Atom{"p", {}}, Atom{"q", {}}});
  const auto tracked = tracked_formulas(g, {pq});
  CHECK(tracked.size() == 3);
  const GroundProgram g2 = with_extra_tracked(g, {pq});
  CHECK(g2.tracked_index(pq) < g2.tracked.size());

  // atoms outside the base are rejected
  CHECK_THROWS_AS(tracked_formulas(g, {BasicFormula::atom(Atom{"zz", {}})}),
                  std::invalid_argument);
  // non-ground extras are rejected
  CHECK_THROWS_AS(tracked_formulas(g, {BasicFormula::atom(Atom{"p", {Term::variable("X")}})}),
                  std::invalid_argument);
}

TEST_CASE("tracking an already tracked formula changes nothing") {
  const GroundProgram g = ground_program(load_fixture("cond.gp"));
  const GroundProgram g2 = with_extra_tracked(g, {g.tracked.front()});
  CHECK(g2.tracked == g.tracked);
  CHECK(lfp(g2) == lfp(g));
}

TEST_CASE("substitution completeness on random small programs") {
  gpdb::testing::Rng rng(7201);
  const char* consts[] = {"a", "b", "c"};
  for (int trial = 0; trial < 100; ++trial) {
    const int nconsts = rng.int_in(1, 3);
    const int nvars = rng.int_in(0, 2);
    // one clause p(X1,..) <- q(X1,..) over a fresh program, plus facts that
    // pin down the constant vocabulary
    std::string text;
    for (int i = 0; i < nconsts; ++i) text += "seed(" + std::string(consts[i]) + ") : [1, 1].\n";
    std::string args;
    for (int v = 0; v < nvars; ++v) args += (v ? ", X" : "X") + std::to_string(v);
    if (nvars > 0) {
      text += "p(" + args + ") : [1, 1] <- q(" + args + ") : [1, 1].\n";
    } else {
      text += "p : [1, 1] <- q : [1, 1].\n";
    }
    const GpProgram p = parse_program(text);
    Limits roomy;
    roomy.max_atoms = 30;
    const GroundProgram g = ground_program(p, roomy);
    // instances of the rule = nconsts^nvars; plus the seed facts
    std::size_t expect = 1;
    for (int v = 0; v < nvars; ++v) expect *= static_cast<std::size_t>(nconsts);
    CHECK(g.clauses.size() == expect + static_cast<std::size_t>(nconsts));
  }
}

TEST_CASE("tracked set is closed over the ground program") {
  gpdb::testing::Rng rng(7202);
  for (int trial = 0; trial < 50; ++trial) {
    const GroundProgram g = ground_program(gpdb::testing::random_gp_program(rng));
    for (const GpClause& c : g.clauses) {
      CHECK_NOTHROW(g.tracked_index(c.head.formula));
      for (const auto& lit : c.positives) CHECK_NOTHROW(g.tracked_index(lit.formula));
      for (const auto& lit : c.negatives) CHECK_NOTHROW(g.tracked_index(lit.formula));
    }
  }
}

TEST_CASE("tracking all basic formulas does not change tracked results") {
  // The fixpoint restricted to program formulas agrees with the fixpoint
  // over the full formula space on the shared domain.
  gpdb::testing::Rng rng(7203);
  for (int trial = 0; trial < 30; ++trial) {
    const GpProgram p = gpdb::testing::random_pf_program(rng, 3, 4);
    const GroundProgram g = ground_program(p);
    const GroundProgram g_all =
        with_extra_tracked(g, gpdb::testing::all_basic_formulas(g.base));
    const FormulaFunction narrow = lfp(g);
    const FormulaFunction wide = lfp(g_all);
    for (std::size_t i = 0; i < g.tracked.size(); ++i) {
      CAPTURE(trial);
      CAPTURE(g.tracked[i].to_string());
      CHECK(narrow.at(i) == wide.at(g_all.tracked_index(g.tracked[i])));
    }
  }
}
