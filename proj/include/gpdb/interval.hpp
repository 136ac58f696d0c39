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

#ifndef GPDB_INTERVAL_HPP
#define GPDB_INTERVAL_HPP

#include <map>
#include <string>

#include "gpdb/ast.hpp"
#include "gpdb/rational.hpp"

namespace gpdb {

// A closed sub-interval of [0,1] with exact rational endpoints, or the empty
// interval. Every constructor input with lo > hi collapses to the single
// canonical empty value, so structural equality decides set equality.
class Interval {
 public:
  Interval() : empty_(false), lo_(0), hi_(1) {}  // [0,1]

  static Interval closed(Rational lo, Rational hi);
  static Interval point(Rational v) { return closed(v, v); }
  static Interval empty();
  static Interval full() { return Interval(); }

  bool is_empty() const { return empty_; }
  bool is_full() const { return !empty_ && lo_.is_zero() && hi_ == Rational(1); }
  bool is_point() const { return !empty_ && lo_ == hi_; }

  // Endpoints of a non-empty interval.
  const Rational& lo() const;
  const Rational& hi() const;

  // True iff *this is a subset of o; the empty interval is a subset of
  // everything.
  bool subset_of(const Interval& o) const;

  std::string to_string() const;  // "[p/q, r/s]" or "empty"

  bool operator==(const Interval& o) const {
    if (empty_ != o.empty_) return false;
    return empty_ || (lo_ == o.lo_ && hi_ == o.hi_);
  }
  bool operator!=(const Interval& o) const { return !(*this == o); }

 private:
  bool empty_;
  Rational lo_, hi_;
};

// Set intersection; empty absorbs, [0,1] is the identity.
Interval intersect(const Interval& a, const Interval& b);

inline bool is_subset(const Interval& a, const Interval& b) { return a.subset_of(b); }

// Total order used for deterministic output: empty first, then by (lo, hi).
int compare(const Interval& a, const Interval& b);

// An assignment of annotation variables to exact rationals in [0,1].
using Binding = std::map<std::string, Rational>;

// Evaluates an annotation item under a binding, applying the totalization
// rules of the built-in function family. Throws UnboundVariableError for a
// variable missing from the binding.
Rational eval_item(const AnnotationItem& item, const Binding& binding);

// Evaluates both endpoints and normalizes (lo > hi yields the empty interval).
Interval eval_annotation(const Annotation& ann, const Binding& binding);

}  // namespace gpdb

#endif  // GPDB_INTERVAL_HPP
