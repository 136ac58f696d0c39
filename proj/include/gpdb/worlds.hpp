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

#ifndef GPDB_WORLDS_HPP
#define GPDB_WORLDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gpdb/errors.hpp"
#include "gpdb/formula_function.hpp"
#include "gpdb/ground.hpp"
#include "gpdb/rational.hpp"

namespace gpdb {

// A world is an Herbrand interpretation: a subset of the base encoded as a
// bit mask indexed by the base ordering. Worlds are enumerated as the
// integers 0 .. 2^|base|-1, which fixes the enumeration once and for all.
using World = std::uint64_t;

// Number of worlds over a base of the given size; the budget caps base_size.
std::uint64_t world_count(std::size_t base_size, const Limits& limits = {});

// Classical satisfaction: a conjunction needs all its atoms in the world, a
// disjunction at least one.
bool satisfies(World world, const BasicFormula& f, const GroundProgram& g);

// A bit vector indexed by world number.
class WorldMask {
 public:
  explicit WorldMask(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::uint64_t size() const { return size_; }
  std::uint64_t count() const;

  bool operator==(const WorldMask& o) const { return size_ == o.size_ && words_ == o.words_; }

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> words_;
};

// The worlds satisfying f, as a mask over the fixed enumeration.
WorldMask satisfying_worlds(const BasicFormula& f, const GroundProgram& g);

// One linear constraint: lo <= sum of p_j over masked worlds <= hi, with
// either bound optional. Nonnegativity of the p_j is implicit.
struct ConstraintRow {
  WorldMask coeffs;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

// The linear system LC(h). rows[0] is always the normalization row (all-ones
// coefficients, lo = hi = 1); the remaining rows bound tracked formulas.
struct ConstraintSystem {
  std::uint64_t nvars = 0;
  std::vector<ConstraintRow> rows;
};

// Builds LC(h) over the tracked set. Formulas valued [0,1] contribute no row
// (the bound is implied by normalization and nonnegativity). A formula valued
// empty contributes the contradictory row lo=1, hi=0, so that infeasibility
// is discovered by the solver rather than special-cased here.
ConstraintSystem build_constraints(const GroundProgram& g, const FormulaFunction& h);

}  // namespace gpdb

#endif  // GPDB_WORLDS_HPP
