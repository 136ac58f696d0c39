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

#include "gpdb/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpdb {

// ── Term / Atom ─────────────────────────────────────────────────────────────

int compare(const Term& a, const Term& b) {
  if (a.is_variable != b.is_variable) return a.is_variable ? 1 : -1;
  return a.name.compare(b.name);
}

bool Atom::is_ground() const {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable; });
}

std::string Atom::to_string() const {
  std::string out = predicate;
  if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) out += ", ";
      out += args[i].name;
    }
    out += ')';
  }
  return out;
}

int compare(const Atom& a, const Atom& b) {
  if (int c = a.predicate.compare(b.predicate); c != 0) return c;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
  return 0;
}

// ── BasicFormula ────────────────────────────────────────────────────────────

BasicFormula::BasicFormula(Connective c, std::vector<Atom> atoms)
    : connective_(c), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("basic formula needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() == 1) connective_ = Connective::Conj;
}

bool BasicFormula::is_ground() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.is_ground(); });
}

void BasicFormula::collect_object_variables(std::set<std::string>& out) const {
  for (const Atom& a : atoms_)
    for (const Term& t : a.args)
      if (t.is_variable) out.insert(t.name);
}

std::string BasicFormula::to_string() const {
  const char* sep = connective_ == Connective::Conj ? " ^ " : " | ";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) out += sep;
    out += atoms_[i].to_string();
  }
  return out;
}

int compare(const BasicFormula& a, const BasicFormula& b) {
  const auto& xs = a.atoms();
  const auto& ys = b.atoms();
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
    if (int c = compare(xs[i], ys[i]); c != 0) return c;
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  if (a.connective() != b.connective()) return a.connective() == Connective::Conj ? -1 : 1;
  return 0;
}

// ── Annotations ─────────────────────────────────────────────────────────────

const char* ann_fn_name(AnnFn f) {
  switch (f) {
    case AnnFn::Mul: return "mul";
    case AnnFn::Div: return "div";
    case AnnFn::Add: return "add";
    case AnnFn::Sub: return "sub";
    case AnnFn::Min: return "min";
    case AnnFn::Max: return "max";
  }
  return "?";
}

AnnotationItem AnnotationItem::constant(Rational value) {
  if (value.sign() < 0 || Rational(1) < value)
    throw std::invalid_argument("annotation constant outside [0, 1]: " + value.to_string());
  AnnotationItem item;
  item.kind_ = Kind::Constant;
  item.value_ = std::move(value);
  return item;
}

AnnotationItem AnnotationItem::variable(std::string name) {
  AnnotationItem item;
  item.kind_ = Kind::Variable;
  item.name_ = std::move(name);
  return item;
}

AnnotationItem AnnotationItem::apply(AnnFn fn, AnnotationItem lhs, AnnotationItem rhs) {
  AnnotationItem item;
  item.kind_ = Kind::Apply;
  item.fn_ = fn;
  item.args_.push_back(std::move(lhs));
  item.args_.push_back(std::move(rhs));
  return item;
}

bool AnnotationItem::is_variable_free() const {
  switch (kind_) {
    case Kind::Constant: return true;
    case Kind::Variable: return false;
    case Kind::Apply:
      return std::all_of(args_.begin(), args_.end(),
                         [](const AnnotationItem& a) { return a.is_variable_free(); });
  }
  return true;
}

void AnnotationItem::collect_variables(std::set<std::string>& out) const {
  switch (kind_) {
    case Kind::Constant: return;
    case Kind::Variable: out.insert(name_); return;
    case Kind::Apply:
      for (const AnnotationItem& a : args_) a.collect_variables(out);
      return;
  }
}

namespace {

bool is_infix_apply(const AnnotationItem& a) {
  return a.kind() == AnnotationItem::Kind::Apply &&
         (a.fn() == AnnFn::Mul || a.fn() == AnnFn::Div);
}

std::string item_call_form(const AnnotationItem& a) {
  return std::string(ann_fn_name(a.fn())) + "(" + a.args()[0].to_string() + ", " +
         a.args()[1].to_string() + ")";
}

}  // namespace

std::string AnnotationItem::to_string() const {
  switch (kind_) {
    case Kind::Constant: return value_.to_string();
    case Kind::Variable: return name_;
    case Kind::Apply:
      // mul and div print as left-associative infix; a nested infix on the
      // right would reassociate on reparse, so it falls back to call form.
      // div between two constants would lex as a fraction, same fallback.
      if (fn_ == AnnFn::Mul || fn_ == AnnFn::Div) {
        if (fn_ == AnnFn::Div && args_[0].kind() == Kind::Constant &&
            args_[1].kind() == Kind::Constant)
          return item_call_form(*this);
        const std::string lhs = args_[0].to_string();
        const std::string rhs =
            is_infix_apply(args_[1]) ? item_call_form(args_[1]) : args_[1].to_string();
        return lhs + (fn_ == AnnFn::Mul ? " * " : " / ") + rhs;
      }
      return item_call_form(*this);
  }
  return "?";
}

bool AnnotationItem::operator==(const AnnotationItem& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Constant: return value_ == o.value_;
    case Kind::Variable: return name_ == o.name_;
    case Kind::Apply: return fn_ == o.fn_ && args_ == o.args_;
  }
  return false;
}

void Annotation::collect_variables(std::set<std::string>& out) const {
  lo.collect_variables(out);
  hi.collect_variables(out);
}

std::string Annotation::to_string() const {
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

// ── Clauses / programs ──────────────────────────────────────────────────────

std::set<std::string> GpClause::object_variables() const {
  std::set<std::string> out;
  head.formula.collect_object_variables(out);
  for (const auto& lit : positives) lit.formula.collect_object_variables(out);
  for (const auto& lit : negatives) lit.formula.collect_object_variables(out);
  return out;
}

std::string GpClause::to_string() const {
  std::string out = head.formula.to_string() + " : " + head.annotation.to_string();
  if (!positives.empty() || !negatives.empty()) {
    out += " <- ";
    bool first = true;
    for (const auto& lit : positives) {
      if (!first) out += " & ";
      first = false;
      out += lit.formula.to_string() + " : " + lit.annotation.to_string();
    }
    for (const auto& lit : negatives) {
      if (!first) out += " & ";
      first = false;
      out += "not(" + lit.formula.to_string() + " : " + lit.annotation.to_string() + ")";
    }
  }
  out += '.';
  return out;
}

bool GpProgram::is_pf() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const GpClause& c) { return c.is_pf(); });
}

std::string GpProgram::to_string() const {
  std::string out;
  for (const GpClause& c : clauses) {
    out += c.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace gpdb
