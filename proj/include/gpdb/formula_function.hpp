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

#ifndef GPDB_FORMULA_FUNCTION_HPP
#define GPDB_FORMULA_FUNCTION_HPP

#include <vector>

#include "gpdb/ground.hpp"
#include "gpdb/interval.hpp"

namespace gpdb {

// A mapping from the tracked basic formulas of a ground program to intervals,
// stored positionally in tracked order. Formulas outside the tracked set
// implicitly carry [0,1]. Equality is pointwise; the canonical empty interval
// makes it decide set equality.
class FormulaFunction {
 public:
  explicit FormulaFunction(std::vector<Interval> values) : values_(std::move(values)) {}

  // ⊥ assigns [0,1] everywhere, ⊤ assigns the empty interval everywhere.
  static FormulaFunction bottom(const GroundProgram& g) {
    return FormulaFunction(std::vector<Interval>(g.tracked.size(), Interval::full()));
  }
  static FormulaFunction top(const GroundProgram& g) {
    return FormulaFunction(std::vector<Interval>(g.tracked.size(), Interval::empty()));
  }

  std::size_t size() const { return values_.size(); }
  const Interval& at(std::size_t i) const { return values_[i]; }
  void set(std::size_t i, Interval v) { values_[i] = std::move(v); }
  const std::vector<Interval>& values() const { return values_; }

  const Interval& value_of(const GroundProgram& g, const BasicFormula& f) const {
    return values_[g.tracked_index(f)];
  }

  bool operator==(const FormulaFunction& o) const { return values_ == o.values_; }
  bool operator!=(const FormulaFunction& o) const { return !(*this == o); }

 private:
  std::vector<Interval> values_;
};

// Lattice order: h1 <= h2 iff h1(F) contains h2(F) for every tracked F.
// Throws std::invalid_argument on a domain mismatch.
bool leq(const FormulaFunction& h1, const FormulaFunction& h2);

// Total order for deterministic output, lexicographic over tracked values.
int compare(const FormulaFunction& a, const FormulaFunction& b);
inline bool operator<(const FormulaFunction& a, const FormulaFunction& b) {
  return compare(a, b) < 0;
}

}  // namespace gpdb

#endif  // GPDB_FORMULA_FUNCTION_HPP
