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

#include "gpdb/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gpdb {
namespace {

enum class Tok {
  Ident,     // lowercase-initial
  Variable,  // uppercase-initial
  Number,    // integer or decimal digits
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Period,
  Arrow,  // <-
  Amp,    // &
  Caret,  // ^
  Pipe,   // |
  Star,   // *
  Slash,  // /
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  bool is_integer = false;  // Number only: no decimal point
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        t.text += take();
      t.kind = std::isupper(static_cast<unsigned char>(t.text[0])) ? Tok::Variable : Tok::Ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      t.is_integer = true;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        t.text += take();
      if (pos_ < src_.size() && src_[pos_] == '.' && pos_ + 1 < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        t.is_integer = false;
        t.text += take();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          t.text += take();
      }
      return t;
    }
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case ',': t.kind = Tok::Comma; break;
      case ':': t.kind = Tok::Colon; break;
      case '.': t.kind = Tok::Period; break;
      case '&': t.kind = Tok::Amp; break;
      case '^': t.kind = Tok::Caret; break;
      case '|': t.kind = Tok::Pipe; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '<':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
          take();
          t.kind = Tok::Arrow;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    t.text = take();
    if (t.kind == Tok::Arrow) t.text = "<-";
    return t;
  }

 private:
  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::map<std::string, AnnFn>& builtin_functions() {
  static const std::map<std::string, AnnFn> fns = {
      {"mul", AnnFn::Mul}, {"div", AnnFn::Div}, {"add", AnnFn::Add},
      {"sub", AnnFn::Sub}, {"min", AnnFn::Min}, {"max", AnnFn::Max},
  };
  return fns;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  GpProgram parse_program() {
    GpProgram program;
    while (cur_.kind != Tok::End) program.clauses.push_back(parse_clause());
    return program;
  }

  BasicFormula parse_formula_only() {
    BasicFormula f = parse_basic();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  // ── token plumbing ──────────────────────────────────────────────────────
  void advance() {
    if (lookahead_.has_value()) {
      cur_ = std::move(lookahead_).value();
      lookahead_.reset();
    } else {
      cur_ = lexer_.next();
    }
  }

  const Token& peek() {
    if (!lookahead_) lookahead_ = lexer_.next();
    return *lookahead_;
  }

  Token expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError("expected " + what + ", found '" + describe(cur_) + "'", cur_.line,
                       cur_.col);
    Token t = cur_;
    advance();
    return t;
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.col); }
  [[noreturn]] static void fail_at(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  // ── grammar productions ─────────────────────────────────────────────────

  GpClause parse_clause() {
    const int line = cur_.line;
    const int col = cur_.col;
    GpClause clause{parse_annformula(), {}, {}, line, col};
    if (cur_.kind == Tok::Arrow) {
      advance();
      // An empty body ("<- .") is accepted and means a fact.
      if (cur_.kind != Tok::Period) {
        parse_literal(clause);
        while (cur_.kind == Tok::Amp) {
          advance();
          parse_literal(clause);
        }
      }
    }
    expect(Tok::Period, "'.'");
    validate_clause(clause);
    return clause;
  }

  void parse_literal(GpClause& clause) {
    if (cur_.kind == Tok::Ident && cur_.text == "not") {
      const Token not_tok = cur_;
      advance();
      expect(Tok::LParen, "'(' after not");
      AnnotatedFormula lit = parse_annformula();
      expect(Tok::RParen, "')'");
      std::set<std::string> vars;
      lit.annotation.collect_variables(vars);
      if (!vars.empty())
        fail_at("annotation variable " + *vars.begin() + " inside a negated literal", not_tok);
      clause.negatives.push_back(std::move(lit));
      return;
    }
    const Token start = cur_;
    AnnotatedFormula lit = parse_annformula();
    check_body_items(lit.annotation, start);
    clause.positives.push_back(std::move(lit));
  }

  AnnotatedFormula parse_annformula() {
    BasicFormula f = parse_basic();
    expect(Tok::Colon, "':'");
    Annotation ann = parse_annotation();
    return AnnotatedFormula{std::move(f), std::move(ann)};
  }

  BasicFormula parse_basic() {
    if (cur_.kind == Tok::LParen) {
      advance();
      BasicFormula f = parse_basic_core();
      expect(Tok::RParen, "')'");
      return f;
    }
    return parse_basic_core();
  }

  BasicFormula parse_basic_core() {
    std::vector<Atom> atoms;
    atoms.push_back(parse_atom());
    Connective conn = Connective::Conj;
    if (cur_.kind == Tok::Caret || cur_.kind == Tok::Pipe) {
      const Tok sep = cur_.kind;
      conn = sep == Tok::Caret ? Connective::Conj : Connective::Disj;
      while (cur_.kind == sep) {
        advance();
        atoms.push_back(parse_atom());
      }
      if (cur_.kind == Tok::Caret || cur_.kind == Tok::Pipe)
        fail("conjunction and disjunction cannot mix in one basic formula");
    }
    return BasicFormula(conn, std::move(atoms));
  }

  Atom parse_atom() {
    const Token name = expect(Tok::Ident, "predicate name");
    if (name.text == "not") fail_at("'not' is a reserved word", name);
    Atom atom;
    atom.predicate = name.text;
    if (cur_.kind == Tok::LParen) {
      advance();
      atom.args.push_back(parse_term());
      while (cur_.kind == Tok::Comma) {
        advance();
        atom.args.push_back(parse_term());
      }
      expect(Tok::RParen, "')'");
    }
    check_arity(atom, name);
    return atom;
  }

  Term parse_term() {
    if (cur_.kind == Tok::Ident) {
      Term t = Term::constant(cur_.text);
      advance();
      return t;
    }
    if (cur_.kind == Tok::Variable) {
      Term t = Term::variable(cur_.text);
      advance();
      return t;
    }
    fail("expected term");
  }

  Annotation parse_annotation() {
    expect(Tok::LBracket, "'['");
    AnnotationItem lo = parse_item();
    expect(Tok::Comma, "','");
    AnnotationItem hi = parse_item();
    expect(Tok::RBracket, "']'");
    return Annotation{std::move(lo), std::move(hi)};
  }

  AnnotationItem parse_item() {
    AnnotationItem item = parse_unary_item();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const AnnFn fn = cur_.kind == Tok::Star ? AnnFn::Mul : AnnFn::Div;
      advance();
      AnnotationItem rhs = parse_unary_item();
      item = AnnotationItem::apply(fn, std::move(item), std::move(rhs));
    }
    return item;
  }

  AnnotationItem parse_unary_item() {
    if (cur_.kind == Tok::Number) {
      const Token num = cur_;
      advance();
      // integer "/" integer is one rational literal, e.g. 19/20.
      if (num.is_integer && cur_.kind == Tok::Slash && peek().kind == Tok::Number &&
          peek().is_integer) {
        advance();  // slash
        const Token den = cur_;
        advance();
        if (den.text == "0" || Rational::parse(den.text).is_zero())
          fail_at("rational literal with zero denominator", den);
        return make_constant(Rational::parse(num.text) / Rational::parse(den.text), num);
      }
      return make_constant(Rational::parse(num.text), num);
    }
    if (cur_.kind == Tok::Variable) {
      AnnotationItem item = AnnotationItem::variable(cur_.text);
      advance();
      return item;
    }
    if (cur_.kind == Tok::Ident) {
      const Token name = cur_;
      const auto& fns = builtin_functions();
      auto it = fns.find(name.text);
      if (it == fns.end()) fail_at("unknown annotation function '" + name.text + "'", name);
      advance();
      expect(Tok::LParen, "'('");
      AnnotationItem lhs = parse_item();
      expect(Tok::Comma, "','");
      AnnotationItem rhs = parse_item();
      expect(Tok::RParen, "')'");
      return AnnotationItem::apply(it->second, std::move(lhs), std::move(rhs));
    }
    fail("expected annotation item");
  }

  static AnnotationItem make_constant(Rational v, const Token& at) {
    if (v.sign() < 0 || Rational(1) < v)
      fail_at("annotation constant outside [0, 1]: " + v.to_string(), at);
    return AnnotationItem::constant(std::move(v));
  }

  // ── clause-level checks ─────────────────────────────────────────────────

  void check_arity(const Atom& atom, const Token& at) {
    auto [it, inserted] = arities_.emplace(atom.predicate, atom.args.size());
    if (!inserted && it->second != atom.args.size())
      fail_at("arity mismatch for predicate '" + atom.predicate + "': declared " +
                  std::to_string(it->second) + ", used with " + std::to_string(atom.args.size()),
              at);
  }

  // Positive body items must be a bare annotation variable or variable-free;
  // a variable buried in a function application has no binding rule.
  static void check_body_items(const Annotation& ann, const Token& at) {
    for (const AnnotationItem* item : {&ann.lo, &ann.hi}) {
      if (item->is_variable() || item->is_variable_free()) continue;
      std::set<std::string> vars;
      item->collect_variables(vars);
      fail_at("annotation variable " + *vars.begin() +
                  " inside a compound body item (body items must be a bare variable or "
                  "variable-free)",
              at);
    }
  }

  void validate_clause(const GpClause& clause) const {
    // Every head annotation variable must be bound by a bare body item.
    std::set<std::string> bound;
    for (const auto& lit : clause.positives) {
      if (lit.annotation.lo.is_variable()) bound.insert(lit.annotation.lo.name());
      if (lit.annotation.hi.is_variable()) bound.insert(lit.annotation.hi.name());
    }
    std::set<std::string> head_vars;
    clause.head.annotation.collect_variables(head_vars);
    for (const std::string& v : head_vars)
      if (!bound.count(v))
        throw ParseError("head annotation variable " + v + " does not appear in the body",
                         clause.line, clause.col);

    // Range restriction on object variables.
    std::set<std::string> head_objs;
    clause.head.formula.collect_object_variables(head_objs);
    std::set<std::string> body_objs;
    for (const auto& lit : clause.positives) lit.formula.collect_object_variables(body_objs);
    for (const auto& lit : clause.negatives) lit.formula.collect_object_variables(body_objs);
    for (const std::string& v : head_objs)
      if (!body_objs.count(v))
        throw ParseError("object variable " + v + " in clause head does not appear in the body",
                         clause.line, clause.col);
  }

  Lexer lexer_;
  Token cur_;
  std::optional<Token> lookahead_;
  std::map<std::string, std::size_t> arities_;
};

}  // namespace

GpProgram parse_program(std::string_view text) { return Parser(text).parse_program(); }

BasicFormula parse_basic_formula(std::string_view text) {
  return Parser(text).parse_formula_only();
}

}  // namespace gpdb
