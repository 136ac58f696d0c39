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

#include "gpdb/worlds.hpp"

#include <bit>
#include <stdexcept>

namespace gpdb {
namespace {

std::uint64_t atom_mask(const BasicFormula& f, const GroundProgram& g) {
  std::uint64_t mask = 0;
  for (const Atom& a : f.atoms()) mask |= std::uint64_t{1} << g.atom_index(a);
  return mask;
}

}  // namespace

std::uint64_t world_count(std::size_t base_size, const Limits& limits) {
  if (base_size > static_cast<std::size_t>(limits.max_atoms))
    throw BudgetError("atom budget exceeded: " + std::to_string(base_size) + " atoms > limit " +
                      std::to_string(limits.max_atoms));
  return std::uint64_t{1} << base_size;
}

bool satisfies(World world, const BasicFormula& f, const GroundProgram& g) {
  const std::uint64_t mask = atom_mask(f, g);
  if (f.connective() == Connective::Conj) return (world & mask) == mask;
  return (world & mask) != 0;
}

std::uint64_t WorldMask::count() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

WorldMask satisfying_worlds(const BasicFormula& f, const GroundProgram& g) {
  const std::uint64_t nworlds = std::uint64_t{1} << g.base.size();
  const std::uint64_t mask = atom_mask(f, g);
  WorldMask out(nworlds);
  if (f.connective() == Connective::Conj) {
    for (std::uint64_t w = 0; w < nworlds; ++w)
      if ((w & mask) == mask) out.set(w);
  } else {
    for (std::uint64_t w = 0; w < nworlds; ++w)
      if ((w & mask) != 0) out.set(w);
  }
  return out;
}

ConstraintSystem build_constraints(const GroundProgram& g, const FormulaFunction& h) {
  if (h.size() != g.tracked.size())
    throw std::invalid_argument("formula function domain does not match the tracked set");
  ConstraintSystem cs;
  cs.nvars = std::uint64_t{1} << g.base.size();

  WorldMask all(cs.nvars);
  for (std::uint64_t w = 0; w < cs.nvars; ++w) all.set(w);
  cs.rows.push_back(ConstraintRow{std::move(all), Rational(1), Rational(1)});

  for (std::size_t i = 0; i < g.tracked.size(); ++i) {
    const Interval& v = h.at(i);
    if (v.is_full()) continue;
    WorldMask mask = satisfying_worlds(g.tracked[i], g);
    if (v.is_empty()) {
      cs.rows.push_back(ConstraintRow{std::move(mask), Rational(1), Rational(0)});
    } else {
      cs.rows.push_back(ConstraintRow{std::move(mask), v.lo(), v.hi()});
    }
  }
  return cs;
}

}  // namespace gpdb
