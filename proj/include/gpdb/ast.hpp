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

#ifndef GPDB_AST_HPP
#define GPDB_AST_HPP

#include <set>
#include <string>
#include <vector>

#include "gpdb/rational.hpp"

namespace gpdb {

// ── Terms and atoms ─────────────────────────────────────────────────────────
// A term is a constant (lowercase-initial identifier) or an object variable
// (uppercase-initial identifier). The language has no first-order function
// symbols, so terms never nest.

struct Term {
  std::string name;
  bool is_variable = false;

  static Term constant(std::string n) { return Term{std::move(n), false}; }
  static Term variable(std::string n) { return Term{std::move(n), true}; }

  bool operator==(const Term& o) const { return is_variable == o.is_variable && name == o.name; }
};

int compare(const Term& a, const Term& b);

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  std::string to_string() const;

  bool operator==(const Atom& o) const { return predicate == o.predicate && args == o.args; }
};

int compare(const Atom& a, const Atom& b);
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

// ── Basic formulas ──────────────────────────────────────────────────────────
// A pure conjunction or pure disjunction of atoms; the two connectives never
// mix within one formula. Construction canonicalizes: atoms are sorted by the
// total (predicate, args) order and deduplicated, and a single atom is always
// stored as a conjunction so that the two singleton forms compare equal.

enum class Connective { Conj, Disj };

class BasicFormula {
 public:
  BasicFormula(Connective c, std::vector<Atom> atoms);

  static BasicFormula atom(Atom a) { return BasicFormula(Connective::Conj, {std::move(a)}); }

  Connective connective() const { return connective_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_single_atom() const { return atoms_.size() == 1; }
  bool is_ground() const;

  void collect_object_variables(std::set<std::string>& out) const;
  std::string to_string() const;

  bool operator==(const BasicFormula& o) const {
    return connective_ == o.connective_ && atoms_ == o.atoms_;
  }

 private:
  Connective connective_;
  std::vector<Atom> atoms_;
};

int compare(const BasicFormula& a, const BasicFormula& b);
inline bool operator<(const BasicFormula& a, const BasicFormula& b) { return compare(a, b) < 0; }

// ── Annotations ─────────────────────────────────────────────────────────────
// An annotation item is a rational constant in [0,1], an annotation variable,
// or an application of one of the built-in annotation functions. The built-in
// family is totalized into [0,1]: add saturates at 1, sub at 0, div treats a
// zero divisor as 1 and saturates at 1.

enum class AnnFn { Mul, Div, Add, Sub, Min, Max };

const char* ann_fn_name(AnnFn f);

class AnnotationItem {
 public:
  enum class Kind { Constant, Variable, Apply };

  static AnnotationItem constant(Rational value);
  static AnnotationItem variable(std::string name);
  static AnnotationItem apply(AnnFn fn, AnnotationItem lhs, AnnotationItem rhs);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }        // Constant
  const std::string& name() const { return name_; }       // Variable
  AnnFn fn() const { return fn_; }                        // Apply
  const std::vector<AnnotationItem>& args() const { return args_; }

  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_variable_free() const;
  void collect_variables(std::set<std::string>& out) const;

  std::string to_string() const;
  bool operator==(const AnnotationItem& o) const;

 private:
  AnnotationItem() = default;

  Kind kind_ = Kind::Constant;
  Rational value_;
  std::string name_;
  AnnFn fn_ = AnnFn::Mul;
  std::vector<AnnotationItem> args_;
};

struct Annotation {
  AnnotationItem lo;
  AnnotationItem hi;

  bool is_variable_free() const { return lo.is_variable_free() && hi.is_variable_free(); }
  void collect_variables(std::set<std::string>& out) const;
  std::string to_string() const;

  bool operator==(const Annotation& o) const { return lo == o.lo && hi == o.hi; }
};

// ── Clauses and programs ────────────────────────────────────────────────────

struct AnnotatedFormula {
  BasicFormula formula;
  Annotation annotation;

  bool operator==(const AnnotatedFormula& o) const {
    return formula == o.formula && annotation == o.annotation;
  }
};

struct GpClause {
  AnnotatedFormula head;
  std::vector<AnnotatedFormula> positives;
  std::vector<AnnotatedFormula> negatives;

  // Source position of the clause head, for diagnostics. Not part of equality.
  int line = 0;
  int col = 0;

  bool is_pf() const { return negatives.empty(); }
  std::set<std::string> object_variables() const;
  std::string to_string() const;

  bool operator==(const GpClause& o) const {
    return head == o.head && positives == o.positives && negatives == o.negatives;
  }
};

struct GpProgram {
  std::vector<GpClause> clauses;

  bool is_pf() const;
  std::string to_string() const;  // reparses to an equal program

  bool operator==(const GpProgram& o) const { return clauses == o.clauses; }
};

}  // namespace gpdb

#endif  // GPDB_AST_HPP
