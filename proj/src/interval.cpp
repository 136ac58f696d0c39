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

#include <stdexcept>

#include "gpdb/errors.hpp"

namespace gpdb {

Interval Interval::closed(Rational lo, Rational hi) {
  if (hi < lo) return empty();
  if (lo.sign() < 0 || Rational(1) < hi)
    throw std::invalid_argument("interval endpoints outside [0, 1]: [" + lo.to_string() + ", " +
                                hi.to_string() + "]");
  Interval out;
  out.lo_ = std::move(lo);
  out.hi_ = std::move(hi);
  return out;
}

Interval Interval::empty() {
  Interval out;
  out.empty_ = true;
  out.lo_ = Rational(1);
  out.hi_ = Rational(0);
  return out;
}

const Rational& Interval::lo() const {
  if (empty_) throw std::logic_error("endpoint of empty interval");
  return lo_;
}

const Rational& Interval::hi() const {
  if (empty_) throw std::logic_error("endpoint of empty interval");
  return hi_;
}

bool Interval::subset_of(const Interval& o) const {
  if (empty_) return true;
  if (o.empty_) return false;
  return o.lo_ <= lo_ && hi_ <= o.hi_;
}

std::string Interval::to_string() const {
  if (empty_) return "empty";
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

Interval intersect(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval::closed(max(a.lo(), b.lo()), min(a.hi(), b.hi()));
}

int compare(const Interval& a, const Interval& b) {
  if (a.is_empty() != b.is_empty()) return a.is_empty() ? -1 : 1;
  if (a.is_empty()) return 0;
  if (a.lo() != b.lo()) return a.lo() < b.lo() ? -1 : 1;
  if (a.hi() != b.hi()) return a.hi() < b.hi() ? -1 : 1;
  return 0;
}

namespace {

const Rational kZero(0);
const Rational kOne(1);

Rational clamp01(Rational v) {
  if (v < kZero) return kZero;
  if (kOne < v) return kOne;
  return v;
}

}  // namespace

Rational eval_item(const AnnotationItem& item, const Binding& binding) {
  switch (item.kind()) {
    case AnnotationItem::Kind::Constant:
      return item.value();
    case AnnotationItem::Kind::Variable: {
      auto it = binding.find(item.name());
      if (it == binding.end()) throw UnboundVariableError(item.name());
      return it->second;
    }
    case AnnotationItem::Kind::Apply: {
      const Rational x = eval_item(item.args()[0], binding);
      const Rational y = eval_item(item.args()[1], binding);
      switch (item.fn()) {
        case AnnFn::Mul: return x * y;
        case AnnFn::Div: return y.is_zero() ? kOne : clamp01(x / y);
        case AnnFn::Add: return clamp01(x + y);
        case AnnFn::Sub: return clamp01(x - y);
        case AnnFn::Min: return min(x, y);
        case AnnFn::Max: return max(x, y);
      }
      break;
    }
  }
  throw std::logic_error("unreachable annotation item kind");
}

Interval eval_annotation(const Annotation& ann, const Binding& binding) {
  Rational lo = eval_item(ann.lo, binding);
  Rational hi = eval_item(ann.hi, binding);
  return Interval::closed(std::move(lo), std::move(hi));
}

}  // namespace gpdb
