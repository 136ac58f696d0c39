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

#include "gpdb/fixpoint.hpp"

#include <stdexcept>

#include "gpdb/interval.hpp"
#include "gpdb/lp.hpp"
#include "gpdb/worlds.hpp"

namespace gpdb {
namespace {

// Adds name := value to the binding; false on a conflicting existing binding.
bool bind(Binding& binding, const std::string& name, const Rational& value) {
  auto [it, inserted] = binding.emplace(name, value);
  return inserted || it->second == value;
}

const Interval& literal_value(const GroundProgram& g, const FormulaFunction& h,
                              const AnnotatedFormula& lit) {
  return h.at(g.tracked_index(lit.formula));
}

}  // namespace

FormulaFunction sp_step(const GroundProgram& g, const FormulaFunction& h, bool negation_aware) {
  if (h.size() != g.tracked.size())
    throw std::invalid_argument("formula function domain does not match the tracked set");
  if (!negation_aware && !g.pf)
    throw NegationError("the plain consequence operator is defined for negation-free programs");

  std::vector<Interval> values(g.tracked.size(), Interval::full());
  for (const GpClause& clause : g.clauses) {
    if (negation_aware) {
      bool blocked = false;
      for (const AnnotatedFormula& lit : clause.negatives) {
        const Interval bound = eval_annotation(lit.annotation, Binding{});
        if (literal_value(g, h, lit).subset_of(bound)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
    }

    // First pass binds bare annotation variables to interval endpoints.
    Binding binding;
    bool applicable = true;
    bool empty_literal = false;
    for (const AnnotatedFormula& lit : clause.positives) {
      const Interval& hv = literal_value(g, h, lit);
      const bool lo_bare = lit.annotation.lo.is_variable();
      const bool hi_bare = lit.annotation.hi.is_variable();
      if (hv.is_empty() && (lo_bare || hi_bare)) {
        empty_literal = true;
        continue;
      }
      if (lo_bare && !bind(binding, lit.annotation.lo.name(), hv.lo())) {
        applicable = false;
        break;
      }
      if (hi_bare && !bind(binding, lit.annotation.hi.name(), hv.hi())) {
        applicable = false;
        break;
      }
    }
    if (!applicable) continue;

    // Second pass checks containment of each literal's value in its
    // annotation, now that all bindings are known.
    for (const AnnotatedFormula& lit : clause.positives) {
      const Interval& hv = literal_value(g, h, lit);
      if (hv.is_empty() && (lit.annotation.lo.is_variable() || lit.annotation.hi.is_variable()))
        continue;
      const Interval alpha = eval_annotation(lit.annotation, binding);
      if (!hv.subset_of(alpha)) {
        applicable = false;
        break;
      }
    }
    if (!applicable) continue;

    const Interval contribution =
        empty_literal ? Interval::empty() : eval_annotation(clause.head.annotation, binding);
    const std::size_t idx = g.tracked_index(clause.head.formula);
    values[idx] = intersect(values[idx], contribution);
  }
  return FormulaFunction(std::move(values));
}

FormulaFunction tp_step(const GroundProgram& g, const FormulaFunction& h, bool negation_aware,
                        EvalStats* stats) {
  const FormulaFunction s = sp_step(g, h, negation_aware);
  const ConstraintSystem cs = build_constraints(g, s);

  // A point value [c,c] enters LC as an equality, so its own objective is
  // pinned to c and needs no solve; everything else goes to the solver in
  // one batch over the shared system.
  std::vector<Objective> objectives;
  std::vector<std::size_t> solve_idx;
  for (std::size_t i = 0; i < g.tracked.size(); ++i) {
    if (s.at(i).is_point()) continue;
    objectives.push_back(Objective{satisfying_worlds(g.tracked[i], g)});
    solve_idx.push_back(i);
  }

  if (stats) stats->lp_calls += 1 + 2 * static_cast<long>(objectives.size());
  const auto ranges = optimize_ranges(cs, objectives);
  if (!ranges) {
    if (stats) ++stats->infeasible_steps;
    return FormulaFunction::top(g);
  }

  std::vector<Interval> values(g.tracked.size());
  for (std::size_t i = 0; i < g.tracked.size(); ++i)
    if (s.at(i).is_point()) values[i] = s.at(i);
  for (std::size_t j = 0; j < solve_idx.size(); ++j)
    values[solve_idx[j]] = Interval::closed((*ranges)[j].min, (*ranges)[j].max);
  return FormulaFunction(std::move(values));
}

FormulaFunction lfp(const GroundProgram& g, const Limits& limits, EvalStats* stats) {
  if (!g.pf)
    throw NegationError("least fixpoint iteration requires a negation-free (pf) program");

  FormulaFunction h = FormulaFunction::bottom(g);
  for (int iter = 1; iter <= limits.max_iters; ++iter) {
    FormulaFunction next = tp_step(g, h, false, stats);
    if (stats) ++stats->iterations;
    if (!leq(h, next))
      throw std::logic_error("fixpoint iteration produced a non-increasing chain");
    if (next == h) return h;
    h = std::move(next);
  }
  throw DivergenceError("no fixpoint within " + std::to_string(limits.max_iters) +
                        " iterations");
}

bool is_fixpoint(const GroundProgram& g, const FormulaFunction& h, EvalStats* stats) {
  return tp_step(g, h, true, stats) == h;
}

}  // namespace gpdb
