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

#ifndef GPDB_TESTS_VERTEX_ORACLE_HPP
#define GPDB_TESTS_VERTEX_ORACLE_HPP

#include <vector>

#include "gpdb/lp.hpp"
#include "gpdb/rational.hpp"
#include "gpdb/worlds.hpp"

namespace gpdb::testing {

struct OracleResult {
  bool feasible = false;
  Rational min;
  Rational max;
};

// Brute-force reference optimizer, independent of the simplex code path: it
// enumerates every basic solution of the system (all choices of a variable
// support plus a matching set of tight constraint hyperplanes, solved by
// Gaussian elimination), keeps the feasible ones, and takes the extremes of
// the objective over them. The feasible set lies in the probability simplex,
// so it is bounded and every optimum is attained at such a vertex. Intended
// for small systems only (its cost is exponential in the world count).
OracleResult oracle_optimize(const ConstraintSystem& cs, const Objective& obj);

}  // namespace gpdb::testing

#endif  // GPDB_TESTS_VERTEX_ORACLE_HPP
