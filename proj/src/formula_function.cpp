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

#include "gpdb/formula_function.hpp"

#include <stdexcept>

namespace gpdb {

bool leq(const FormulaFunction& h1, const FormulaFunction& h2) {
  if (h1.size() != h2.size())
    throw std::invalid_argument("formula functions have different tracked domains");
  for (std::size_t i = 0; i < h1.size(); ++i)
    if (!h2.at(i).subset_of(h1.at(i))) return false;
  return true;
}

int compare(const FormulaFunction& a, const FormulaFunction& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = compare(a.at(i), b.at(i)); c != 0) return c;
  return 0;
}

}  // namespace gpdb
