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

#include "gpdb/lp.hpp"

#include <stdexcept>

namespace gpdb {
namespace {

const Rational kZero(0);
const Rational kOne(1);

// One-sided constraint extracted from a range row.
enum class SideKind { Le, Ge, Eq };

struct Side {
  const WorldMask* mask;
  SideKind kind;
  Rational b;
};

// Dense simplex tableau over exact rationals.
//
// Column layout: [0, nvars) world variables, then one slack or surplus column
// per inequality side, then one artificial column per Ge/Eq side. Bland's
// rule (lowest eligible index enters, lowest basic index breaks ratio ties)
// guarantees termination; all right-hand sides are in [0,1] so the phase-one
// start is immediate.
class Simplex {
 public:
  explicit Simplex(const ConstraintSystem& cs) : nvars_(cs.nvars) {
    for (const ConstraintRow& row : cs.rows) {
      if (row.lo && row.hi && *row.lo == *row.hi) {
        sides_.push_back(Side{&row.coeffs, SideKind::Eq, *row.lo});
      } else {
        // A lower bound of 0 and an upper bound of 1 are implied by
        // normalization and nonnegativity; their sides are dropped.
        if (row.lo && row.lo->sign() > 0) sides_.push_back(Side{&row.coeffs, SideKind::Ge, *row.lo});
        if (row.hi && *row.hi < kOne) sides_.push_back(Side{&row.coeffs, SideKind::Le, *row.hi});
      }
    }
    build_tableau();
  }

  // Phase one: minimize the sum of artificial variables. Returns true when
  // the system is feasible (optimum zero), leaving a feasible basis behind.
  bool phase_one() {
    std::vector<Rational> cost(ncols_, kZero);
    for (std::size_t j = nreal_; j < ncols_; ++j) cost[j] = kOne;
    load_cost(cost);
    iterate(ncols_);  // artificials may participate in phase one
    if (!zrhs_.is_zero()) return false;
    remove_artificials();
    return true;
  }

  // Phase two over a feasible basis: minimizes (or maximizes) the total
  // probability of the masked worlds.
  Rational optimize(const WorldMask& objective, bool maximize) {
    std::vector<Rational> cost(ncols_, kZero);
    for (std::uint64_t j = 0; j < nvars_; ++j)
      if (objective.test(j)) cost[j] = maximize ? -kOne : kOne;
    load_cost(cost);
    iterate(nreal_);  // artificials are barred from re-entering
    const Rational value = -zrhs_;
    return maximize ? -value : value;
  }

  std::vector<Rational> witness() const {
    std::vector<Rational> x(nvars_, kZero);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < nvars_) x[basis_[r]] = rhs_[r];
    return x;
  }

 private:
  void build_tableau() {
    const std::size_t m = sides_.size();
    std::size_t nslack = 0, nart = 0;
    for (const Side& s : sides_) {
      if (s.kind != SideKind::Eq) ++nslack;
      if (s.kind != SideKind::Le) ++nart;
    }
    nreal_ = nvars_ + nslack;
    ncols_ = nreal_ + nart;

    rows_.assign(m, std::vector<Rational>(ncols_, kZero));
    rhs_.resize(m);
    basis_.resize(m);

    std::size_t next_slack = nvars_;
    std::size_t next_art = nreal_;
    for (std::size_t r = 0; r < m; ++r) {
      const Side& s = sides_[r];
      for (std::uint64_t j = 0; j < nvars_; ++j)
        if (s.mask->test(j)) rows_[r][j] = kOne;
      rhs_[r] = s.b;
      switch (s.kind) {
        case SideKind::Le:
          rows_[r][next_slack] = kOne;
          basis_[r] = next_slack++;
          break;
        case SideKind::Ge:
          rows_[r][next_slack] = -kOne;
          ++next_slack;
          rows_[r][next_art] = kOne;
          basis_[r] = next_art++;
          break;
        case SideKind::Eq:
          rows_[r][next_art] = kOne;
          basis_[r] = next_art++;
          break;
      }
    }
  }

  // Installs a cost vector and prices out the current basis so that reduced
  // costs of basic columns are zero.
  void load_cost(const std::vector<Rational>& cost) {
    z_ = cost;
    zrhs_ = kZero;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!rows_[r][j].is_zero()) z_[j] -= cb * rows_[r][j];
      zrhs_ -= cb * rhs_[r];
    }
  }

  void iterate(std::size_t enter_limit) {
    while (true) {
      // Bland: the lowest-index column with a negative reduced cost enters.
      std::size_t enter = enter_limit;
      for (std::size_t j = 0; j < enter_limit; ++j) {
        if (z_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == enter_limit) return;  // optimal

      // Ratio test; ties broken by the lowest basic variable index.
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter].sign() <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size())
        throw std::logic_error("unbounded linear program over the probability simplex");
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    std::vector<Rational>& prow = rows_[r];
    const Rational piv = prow[j];
    if (!(piv == kOne)) {
      for (std::size_t c = 0; c < ncols_; ++c)
        if (!prow[c].is_zero()) prow[c] /= piv;
      rhs_[r] /= piv;
    }
    for (std::size_t r2 = 0; r2 < rows_.size(); ++r2) {
      if (r2 == r || rows_[r2][j].is_zero()) continue;
      const Rational factor = rows_[r2][j];
      for (std::size_t c = 0; c < ncols_; ++c)
        if (!prow[c].is_zero()) rows_[r2][c] -= factor * prow[c];
      rhs_[r2] -= factor * rhs_[r];
    }
    if (!z_[j].is_zero()) {
      const Rational factor = z_[j];
      for (std::size_t c = 0; c < ncols_; ++c)
        if (!prow[c].is_zero()) z_[c] -= factor * prow[c];
      zrhs_ -= factor * rhs_[r];
    }
    basis_[r] = j;
  }

  // After a zero-optimum phase one, artificials still in the basis sit at
  // value zero: pivot them onto any real column, or drop their row when it
  // has become redundant (all-zero over real columns).
  void remove_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < nreal_) {
        ++r;
        continue;
      }
      std::size_t j = nreal_;
      for (std::size_t c = 0; c < nreal_; ++c) {
        if (!rows_[r][c].is_zero()) {
          j = c;
          break;
        }
      }
      if (j < nreal_) {
        pivot(r, j);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  std::uint64_t nvars_;
  std::vector<Side> sides_;
  std::size_t nreal_ = 0;  // world + slack columns; artificials follow
  std::size_t ncols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> z_;
  Rational zrhs_;
};

LpOutcome solve(const ConstraintSystem& cs, const Objective& obj, bool maximize) {
  Simplex simplex(cs);
  LpOutcome out;
  if (!simplex.phase_one()) return out;
  out.status = LpStatus::Feasible;
  out.value = simplex.optimize(obj.worlds, maximize);
  out.witness = simplex.witness();
  return out;
}

}  // namespace

bool feasible(const ConstraintSystem& cs) { return Simplex(cs).phase_one(); }

std::optional<std::vector<RangeResult>> optimize_ranges(const ConstraintSystem& cs,
                                                        const std::vector<Objective>& objs) {
  Simplex simplex(cs);
  if (!simplex.phase_one()) return std::nullopt;
  std::vector<RangeResult> out;
  out.reserve(objs.size());
  for (const Objective& obj : objs) {
    RangeResult r;
    r.min = simplex.optimize(obj.worlds, false);
    r.max = simplex.optimize(obj.worlds, true);
    out.push_back(std::move(r));
  }
  return out;
}

LpOutcome minimize(const ConstraintSystem& cs, const Objective& obj) {
  return solve(cs, obj, false);
}

LpOutcome maximize(const ConstraintSystem& cs, const Objective& obj) {
  return solve(cs, obj, true);
}

bool witness_satisfies(const ConstraintSystem& cs, const std::vector<Rational>& x) {
  if (x.size() != cs.nvars) return false;
  for (const Rational& v : x)
    if (v.sign() < 0) return false;
  for (const ConstraintRow& row : cs.rows) {
    Rational sum(0);
    for (std::uint64_t j = 0; j < cs.nvars; ++j)
      if (row.coeffs.test(j)) sum += x[j];
    if (row.lo && sum < *row.lo) return false;
    if (row.hi && *row.hi < sum) return false;
  }
  return true;
}

Rational objective_value(const Objective& obj, const std::vector<Rational>& x) {
  Rational sum(0);
  for (std::uint64_t j = 0; j < x.size() && j < obj.worlds.size(); ++j)
    if (obj.worlds.test(j)) sum += x[j];
  return sum;
}

}  // namespace gpdb
