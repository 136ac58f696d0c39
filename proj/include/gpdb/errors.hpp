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

#ifndef GPDB_ERRORS_HPP
#define GPDB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpdb {

// Engine-wide resource limits. Evaluation is exponential in both the number
// of ground atoms (worlds are 2^|base|) and the number of distinct negated
// literals (stable enumeration walks 2^k program transforms), so both are
// capped with defaults that keep desk-scale programs instant.
struct Limits {
  int max_atoms = 12;
  int max_neg = 12;
  int max_iters = 1000;
};

// A program exceeded one of the Limits budgets.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Fixpoint iteration did not converge within max_iters steps.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A least-fixpoint computation was requested for a program with negation.
class NegationError : public std::runtime_error {
 public:
  explicit NegationError(const std::string& what) : std::runtime_error(what) {}
};

// An annotation was evaluated under a binding that misses one of its variables.
class UnboundVariableError : public std::runtime_error {
 public:
  explicit UnboundVariableError(const std::string& var)
      : std::runtime_error("unbound annotation variable: " + var), variable(var) {}
  std::string variable;
};

}  // namespace gpdb

#endif  // GPDB_ERRORS_HPP
