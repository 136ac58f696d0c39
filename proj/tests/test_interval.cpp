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

#include "gpdb/interval.hpp"

#include <doctest.h>

#include <vector>

#include "gpdb/errors.hpp"
#include "support/gen.hpp"

using gpdb::AnnFn;
using gpdb::Annotation;
using gpdb::AnnotationItem;
using gpdb::Binding;
using gpdb::Interval;
using gpdb::Rational;

namespace {

Interval iv(long nlo, long dlo, long nhi, long dhi) {
  return Interval::closed(Rational(nlo, dlo), Rational(nhi, dhi));
}

}  // namespace

TEST_CASE("intersection basics") {
  CHECK(gpdb::intersect(iv(1, 1, 1, 1), iv(19, 20, 1, 1)) == iv(1, 1, 1, 1));
  CHECK(gpdb::intersect(iv(0, 1, 1, 2), iv(3, 5, 1, 1)).is_empty());
  const Interval x = iv(1, 4, 3, 4);
  CHECK(gpdb::intersect(Interval::full(), x) == x);
  CHECK(gpdb::intersect(Interval::empty(), x).is_empty());
}

TEST_CASE("reversed endpoints normalize to the canonical empty interval") {
  CHECK(Interval::closed(Rational(3, 4), Rational(1, 4)).is_empty());
  CHECK(Interval::closed(Rational(3, 4), Rational(1, 4)) == Interval::empty());
  CHECK_THROWS_AS(Interval::closed(Rational(-1, 4), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Interval::closed(Rational(1, 2), Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("subset tests") {
  CHECK(iv(1, 1, 1, 1).subset_of(iv(1, 1, 1, 1)));
  CHECK_FALSE(Interval::full().subset_of(iv(49, 100, 51, 100)));
  CHECK(Interval::empty().subset_of(iv(3, 10, 3, 10)));
  CHECK(iv(1, 2, 1, 2).subset_of(iv(49, 100, 51, 100)));
  CHECK_FALSE(iv(1, 2, 1, 2).subset_of(Interval::empty()));
}

TEST_CASE("intersection is the lattice meet under subset order") {
  gpdb::testing::Rng rng(7001);
  for (int trial = 0; trial < 300; ++trial) {
    const Interval a = rng.interval();
    const Interval b = rng.interval();
    const Interval c = rng.interval();
    const Interval ab = gpdb::intersect(a, b);
    CHECK(gpdb::intersect(a, b) == gpdb::intersect(b, a));
    CHECK(gpdb::intersect(gpdb::intersect(a, b), c) == gpdb::intersect(a, gpdb::intersect(b, c)));
    CHECK(gpdb::intersect(a, a) == a);
    CHECK(ab.subset_of(a));
    CHECK(ab.subset_of(b));
    if (c.subset_of(a) && c.subset_of(b)) CHECK(c.subset_of(ab));
    // partial order sanity
    CHECK(a.subset_of(a));
    if (a.subset_of(b) && b.subset_of(a)) CHECK(a == b);
    if (a.subset_of(b) && b.subset_of(c)) CHECK(a.subset_of(c));
  }
}

TEST_CASE("annotation evaluation with bindings") {
  const Binding binding{{"V1", Rational(4, 5)}, {"V2", Rational(2, 5)}};

  // [0.5 * V1, 0.5 * V1] at V1 = 0.8
  const AnnotationItem half_v1 = AnnotationItem::apply(
      AnnFn::Mul, AnnotationItem::constant(Rational(1, 2)), AnnotationItem::variable("V1"));
  CHECK(gpdb::eval_annotation(Annotation{half_v1, half_v1}, binding) == iv(2, 5, 2, 5));

  // [V2 / V1, V2 / V1] at V2 = 0.4, V1 = 0.8
  const AnnotationItem ratio = AnnotationItem::apply(AnnFn::Div, AnnotationItem::variable("V2"),
                                                     AnnotationItem::variable("V1"));
  CHECK(gpdb::eval_annotation(Annotation{ratio, ratio}, binding) == iv(1, 2, 1, 2));

  // division by zero totalizes to 1
  const Binding zero{{"V1", Rational(0)}, {"V2", Rational(2, 5)}};
  CHECK(gpdb::eval_annotation(Annotation{ratio, ratio}, zero) == iv(1, 1, 1, 1));

  CHECK_THROWS_AS(gpdb::eval_item(AnnotationItem::variable("W"), binding),
                  gpdb::UnboundVariableError);
}

TEST_CASE("totalization clamps into the unit interval") {
  const Binding b{{"X", Rational(3, 4)}, {"Y", Rational(2, 3)}};
  auto apply = [&](AnnFn fn, const char* x, const char* y) {
    return gpdb::eval_item(AnnotationItem::apply(fn, AnnotationItem::variable(x),
                                                 AnnotationItem::variable(y)),
                           b);
  };
  CHECK(apply(AnnFn::Add, "X", "Y") == Rational(1));       // 3/4 + 2/3 clamps
  CHECK(apply(AnnFn::Sub, "Y", "X") == Rational(0));       // 2/3 - 3/4 clamps
  CHECK(apply(AnnFn::Div, "X", "Y") == Rational(1));       // (3/4)/(2/3) clamps
  CHECK(apply(AnnFn::Min, "X", "Y") == Rational(2, 3));
  CHECK(apply(AnnFn::Max, "X", "Y") == Rational(3, 4));
}

TEST_CASE("random item trees never evaluate outside the unit interval") {
  gpdb::testing::Rng rng(7002);
  const std::vector<AnnFn> fns{AnnFn::Mul, AnnFn::Div, AnnFn::Add,
                               AnnFn::Sub, AnnFn::Min, AnnFn::Max};
  for (int trial = 0; trial < 500; ++trial) {
    Binding binding;
    for (int v = 0; v < 3; ++v) binding["V" + std::to_string(v)] = rng.rational01();
    // random tree of depth up to 3
    std::vector<AnnotationItem> leaves;
    for (int i = 0; i < 4; ++i) {
      leaves.push_back(rng.chance(50)
                           ? AnnotationItem::constant(rng.rational01())
                           : AnnotationItem::variable("V" + std::to_string(rng.int_in(0, 2))));
    }
    while (leaves.size() > 1) {
      const AnnFn fn = fns[static_cast<std::size_t>(rng.int_in(0, 5))];
      AnnotationItem rhs = leaves.back();
      leaves.pop_back();
      AnnotationItem lhs = leaves.back();
      leaves.pop_back();
      leaves.push_back(AnnotationItem::apply(fn, std::move(lhs), std::move(rhs)));
    }
    const Rational v = gpdb::eval_item(leaves.front(), binding);
    CHECK(Rational(0) <= v);
    CHECK(v <= Rational(1));
  }
}
