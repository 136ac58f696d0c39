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

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gpdb {
namespace {

void collect_signature(const GpProgram& p, std::map<std::string, std::size_t>& predicates,
                       std::set<std::string>& constants) {
  auto scan_formula = [&](const BasicFormula& f) {
    for (const Atom& a : f.atoms()) {
      predicates.emplace(a.predicate, a.args.size());
      for (const Term& t : a.args)
        if (!t.is_variable) constants.insert(t.name);
    }
  };
  for (const GpClause& c : p.clauses) {
    scan_formula(c.head.formula);
    for (const auto& lit : c.positives) scan_formula(lit.formula);
    for (const auto& lit : c.negatives) scan_formula(lit.formula);
  }
}

Atom substitute(const Atom& a, const std::map<std::string, std::string>& subst) {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) {
    if (t.is_variable) {
      out.args.push_back(Term::constant(subst.at(t.name)));
    } else {
      out.args.push_back(t);
    }
  }
  return out;
}

BasicFormula substitute(const BasicFormula& f, const std::map<std::string, std::string>& subst) {
  std::vector<Atom> atoms;
  atoms.reserve(f.atoms().size());
  for (const Atom& a : f.atoms()) atoms.push_back(substitute(a, subst));
  return BasicFormula(f.connective(), std::move(atoms));
}

AnnotatedFormula substitute(const AnnotatedFormula& af,
                            const std::map<std::string, std::string>& subst) {
  return AnnotatedFormula{substitute(af.formula, subst), af.annotation};
}

// Calls fn with every arity-length index tuple over [0, n_choices).
template <typename Fn>
void for_each_tuple(std::size_t arity, std::size_t n_choices, Fn&& fn) {
  if (arity > 0 && n_choices == 0) return;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    fn(idx);
    std::size_t i = arity;
    while (i > 0 && ++idx[i - 1] == n_choices) {
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
}

}  // namespace

std::size_t GroundProgram::atom_index(const Atom& a) const {
  auto it = std::lower_bound(base.begin(), base.end(), a);
  if (it == base.end() || !(*it == a))
    throw std::invalid_argument("atom outside the Herbrand base: " + a.to_string());
  return static_cast<std::size_t>(it - base.begin());
}

bool GroundProgram::in_base(const Atom& a) const {
  auto it = std::lower_bound(base.begin(), base.end(), a);
  return it != base.end() && *it == a;
}

std::size_t GroundProgram::tracked_index(const BasicFormula& f) const {
  auto it = std::lower_bound(tracked.begin(), tracked.end(), f);
  if (it == tracked.end() || !(*it == f))
    throw std::invalid_argument("formula is not tracked: " + f.to_string());
  return static_cast<std::size_t>(it - tracked.begin());
}

std::vector<Atom> herbrand_base(const GpProgram& p, const Limits& limits) {
  std::map<std::string, std::size_t> predicates;
  std::set<std::string> constants;
  collect_signature(p, predicates, constants);

  // Base size is sum over predicates of |constants|^arity; fail fast on the
  // budget before materializing anything.
  unsigned long long total = 0;
  const unsigned long long budget = static_cast<unsigned long long>(limits.max_atoms);
  for (const auto& [pred, arity] : predicates) {
    if (arity > 0 && constants.empty())
      throw std::invalid_argument("predicate '" + pred +
                                  "' has positive arity but the program has no constants");
    unsigned long long combos = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      combos *= constants.size();
      if (combos > budget) break;
    }
    total += combos;
    if (total > budget)
      throw BudgetError("atom budget exceeded: Herbrand base needs more than " +
                        std::to_string(limits.max_atoms) + " atoms");
  }

  std::vector<std::string> consts(constants.begin(), constants.end());
  std::vector<Atom> base;
  base.reserve(total);
  for (const auto& [pred, arity] : predicates) {
    for_each_tuple(arity, consts.size(), [&](const std::vector<std::size_t>& idx) {
      Atom a;
      a.predicate = pred;
      for (std::size_t i = 0; i < arity; ++i) a.args.push_back(Term::constant(consts[idx[i]]));
      base.push_back(std::move(a));
    });
  }
  std::sort(base.begin(), base.end());
  return base;
}

GroundProgram ground_program(const GpProgram& p, const Limits& limits) {
  GroundProgram g;
  g.base = herbrand_base(p, limits);
  g.pf = p.is_pf();

  std::set<std::string> constant_set;
  {
    std::map<std::string, std::size_t> predicates;
    collect_signature(p, predicates, constant_set);
  }
  std::vector<std::string> consts(constant_set.begin(), constant_set.end());

  for (const GpClause& clause : p.clauses) {
    const std::set<std::string> var_set = clause.object_variables();
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    for_each_tuple(vars.size(), consts.size(), [&](const std::vector<std::size_t>& idx) {
      std::map<std::string, std::string> subst;
      for (std::size_t i = 0; i < vars.size(); ++i) subst[vars[i]] = consts[idx[i]];
      GpClause inst{substitute(clause.head, subst), {}, {}, clause.line, clause.col};
      for (const auto& lit : clause.positives) inst.positives.push_back(substitute(lit, subst));
      for (const auto& lit : clause.negatives) inst.negatives.push_back(substitute(lit, subst));
      g.clauses.push_back(std::move(inst));
    });
  }

  std::set<BasicFormula> tracked;
  for (const GpClause& c : g.clauses) {
    tracked.insert(c.head.formula);
    for (const auto& lit : c.positives) tracked.insert(lit.formula);
    for (const auto& lit : c.negatives) tracked.insert(lit.formula);
  }
  g.tracked.assign(tracked.begin(), tracked.end());
  return g;
}

std::vector<BasicFormula> tracked_formulas(const GroundProgram& g,
                                           const std::vector<BasicFormula>& extra) {
  std::vector<BasicFormula> out = g.tracked;
  for (const BasicFormula& f : extra) {
    if (!f.is_ground())
      throw std::invalid_argument("tracked formulas must be ground: " + f.to_string());
    for (const Atom& a : f.atoms())
      if (!g.in_base(a))
        throw std::invalid_argument("formula mentions an atom outside the Herbrand base: " +
                                    a.to_string());
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroundProgram with_extra_tracked(const GroundProgram& g, const std::vector<BasicFormula>& extra) {
  GroundProgram out = g;
  out.tracked = tracked_formulas(g, extra);
  return out;
}

}  // namespace gpdb
