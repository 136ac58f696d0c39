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

#include "gpdb/stable.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gpdb {
namespace {

struct KeyLess {
  bool operator()(const BlockingKey& a, const BlockingKey& b) const { return compare(a, b) < 0; }
};

struct FnLess {
  bool operator()(const FormulaFunction& a, const FormulaFunction& b) const {
    return compare(a, b) < 0;
  }
};

std::size_t key_index(const std::vector<BlockingKey>& keys, const BlockingKey& key) {
  auto it = std::lower_bound(keys.begin(), keys.end(), key, KeyLess{});
  if (it == keys.end() || compare(*it, key) != 0)
    throw std::logic_error("negated literal missing from the blocking key set");
  return static_cast<std::size_t>(it - keys.begin());
}

BlockingKey key_of(const AnnotatedFormula& lit) {
  return BlockingKey{lit.formula, eval_annotation(lit.annotation, Binding{})};
}

}  // namespace

int compare(const BlockingKey& a, const BlockingKey& b) {
  if (int c = compare(a.formula, b.formula); c != 0) return c;
  return compare(a.bound, b.bound);
}

std::vector<BlockingKey> blocking_keys(const GroundProgram& g) {
  std::vector<BlockingKey> keys;
  for (const GpClause& clause : g.clauses)
    for (const AnnotatedFormula& lit : clause.negatives) keys.push_back(key_of(lit));
  std::sort(keys.begin(), keys.end(), KeyLess{});
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const BlockingKey& a, const BlockingKey& b) {
                           return compare(a, b) == 0;
                         }),
             keys.end());
  return keys;
}

BlockingVector blocking_of(const GroundProgram& g, const FormulaFunction& h) {
  const std::vector<BlockingKey> keys = blocking_keys(g);
  BlockingVector bv;
  bv.blocked.reserve(keys.size());
  for (const BlockingKey& key : keys)
    bv.blocked.push_back(h.at(g.tracked_index(key.formula)).subset_of(key.bound));
  return bv;
}

GroundProgram ff_transform(const GroundProgram& g, const BlockingVector& bv) {
  const std::vector<BlockingKey> keys = blocking_keys(g);
  if (bv.blocked.size() != keys.size())
    throw std::invalid_argument("blocking vector does not match the program's negated literals");

  GroundProgram out;
  out.base = g.base;
  out.tracked = g.tracked;
  out.pf = true;
  for (const GpClause& clause : g.clauses) {
    bool keep = true;
    for (const AnnotatedFormula& lit : clause.negatives) {
      if (bv.blocked[key_index(keys, key_of(lit))]) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    GpClause stripped = clause;
    stripped.negatives.clear();
    out.clauses.push_back(std::move(stripped));
  }
  return out;
}

FormulaFunction sfp(const GroundProgram& g, const FormulaFunction& h, const Limits& limits,
                    EvalStats* stats) {
  return lfp(ff_transform(g, blocking_of(g, h)), limits, stats);
}

bool is_stable(const GroundProgram& g, const FormulaFunction& h, const Limits& limits,
               EvalStats* stats) {
  return sfp(g, h, limits, stats) == h;
}

namespace {

BlockingVector vector_from_mask(std::uint64_t mask, std::size_t k) {
  BlockingVector bv;
  bv.blocked.reserve(k);
  for (std::size_t i = 0; i < k; ++i) bv.blocked.push_back((mask >> i) & 1);
  return bv;
}

std::size_t checked_key_count(const GroundProgram& g, const Limits& limits) {
  const std::size_t k = blocking_keys(g).size();
  if (k > static_cast<std::size_t>(limits.max_neg))
    throw BudgetError("negation budget exceeded: " + std::to_string(k) +
                      " distinct negated literals > limit " + std::to_string(limits.max_neg));
  return k;
}

}  // namespace

std::vector<FormulaFunction> enumerate_stable_functions(const GroundProgram& g,
                                                        const Limits& limits, EvalStats* stats) {
  const std::size_t k = checked_key_count(g, limits);
  std::vector<FormulaFunction> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const BlockingVector bv = vector_from_mask(mask, k);
    FormulaFunction candidate = lfp(ff_transform(g, bv), limits, stats);
    if (blocking_of(g, candidate) == bv) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), FnLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StableClass::StableClass(std::vector<FormulaFunction> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("a stable class cannot be empty");
  std::sort(members_.begin(), members_.end(), FnLess{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

int compare(const StableClass& a, const StableClass& b) {
  const auto& xs = a.members();
  const auto& ys = b.members();
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
    if (int c = compare(xs[i], ys[i]); c != 0) return c;
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

StableClass alternating_class(const GroundProgram& g, const Limits& limits, EvalStats* stats) {
  std::vector<FormulaFunction> sequence{FormulaFunction::bottom(g)};
  std::map<FormulaFunction, std::size_t, FnLess> seen{{sequence.front(), 0}};
  while (true) {
    FormulaFunction next = sfp(g, sequence.back(), limits, stats);
    auto [it, inserted] = seen.emplace(next, sequence.size());
    if (!inserted) {
      // The tail from the first occurrence of `next` onward is the cycle.
      return StableClass(std::vector<FormulaFunction>(
          sequence.begin() + static_cast<std::ptrdiff_t>(it->second), sequence.end()));
    }
    sequence.push_back(std::move(next));
  }
}

std::vector<StableClass> minimal_stable_classes(const GroundProgram& g, const Limits& limits,
                                                EvalStats* stats) {
  const std::size_t k = checked_key_count(g, limits);

  // Candidate nodes: the least fixpoints of all 2^k transforms. sfp maps
  // every candidate back into this set, so it restricts to a total function
  // whose cycles are exactly the inclusion-minimal classes.
  std::vector<FormulaFunction> candidates;
  std::map<FormulaFunction, std::size_t, FnLess> index_of;
  std::vector<std::size_t> lfp_of_mask(std::uint64_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    FormulaFunction fn = lfp(ff_transform(g, vector_from_mask(mask, k)), limits, stats);
    auto [it, inserted] = index_of.emplace(std::move(fn), candidates.size());
    if (inserted) candidates.push_back(it->first);
    lfp_of_mask[mask] = it->second;
  }

  std::vector<std::size_t> next(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const BlockingVector bv = blocking_of(g, candidates[i]);
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (bv.blocked[b]) mask |= std::uint64_t{1} << b;
    next[i] = lfp_of_mask[mask];
  }

  // Cycle collection in the functional graph `next`.
  std::vector<int> state(candidates.size(), 0);  // 0 new, 1 on current path, 2 done
  std::vector<StableClass> classes;
  for (std::size_t start = 0; start < candidates.size(); ++start) {
    if (state[start] != 0) continue;
    std::vector<std::size_t> path;
    std::size_t node = start;
    while (state[node] == 0) {
      state[node] = 1;
      path.push_back(node);
      node = next[node];
    }
    if (state[node] == 1) {
      // Found a new cycle: everything on the path from `node` onward.
      auto cycle_start = std::find(path.begin(), path.end(), node);
      std::vector<FormulaFunction> members;
      for (auto it = cycle_start; it != path.end(); ++it) members.push_back(candidates[*it]);
      classes.emplace_back(std::move(members));
    }
    for (std::size_t n : path) state[n] = 2;
  }

  std::sort(classes.begin(), classes.end(),
            [](const StableClass& a, const StableClass& b) { return compare(a, b) < 0; });
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

bool leq_smyth(const StableClass& s1, const StableClass& s2) {
  for (const FormulaFunction& f1 : s1.members()) {
    bool found = false;
    for (const FormulaFunction& f2 : s2.members())
      if (leq(f1, f2)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool leq_hoare(const StableClass& s1, const StableClass& s2) {
  for (const FormulaFunction& f2 : s2.members()) {
    bool found = false;
    for (const FormulaFunction& f1 : s1.members())
      if (leq(f1, f2)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

namespace {

template <typename Order>
std::vector<StableClass> minimal_under(const std::vector<StableClass>& classes, Order leq_order) {
  std::vector<StableClass> out;
  for (const StableClass& c : classes) {
    bool minimal = true;
    for (const StableClass& other : classes) {
      if (other == c) continue;
      if (leq_order(other, c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<StableClass> hoare_minimal(const std::vector<StableClass>& classes) {
  return minimal_under(classes, leq_hoare);
}

std::vector<StableClass> smyth_minimal(const std::vector<StableClass>& classes) {
  return minimal_under(classes, leq_smyth);
}

}  // namespace gpdb
