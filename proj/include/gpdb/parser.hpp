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

#ifndef GPDB_PARSER_HPP
#define GPDB_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "gpdb/ast.hpp"

namespace gpdb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
        line(line),
        col(col) {}

  int line;
  int col;
};

// Parses the textual clause language:
//
//   program    := { clause }
//   clause     := annformula [ "<-" body ] "."
//   body       := literal { "&" literal }
//   literal    := annformula | "not" "(" annformula ")"
//   annformula := basic ":" annotation
//   basic      := core | "(" core ")"
//   core       := atom { "^" atom } | atom { "|" atom }      (no mixing)
//   atom       := ident [ "(" term { "," term } ")" ]
//   term       := lowercase-ident | Uppercase-ident
//   annotation := "[" item "," item "]"
//   item       := unary { ("*" | "/") unary }
//   unary      := rational | Uppercase-ident | fname "(" item "," item ")"
//   rational   := decimal | integer "/" integer
//
// '%' starts a line comment. "not" is a reserved word. The built-in
// annotation functions are mul, div, add, sub, min and max; "*" and "/" are
// infix sugar for mul and div. Clause-level checks (fixed predicate arities,
// constants within [0,1], variable-free negated annotations, head variables
// bound by the body) are reported as ParseErrors with positions.
GpProgram parse_program(std::string_view text);

// Parses a single ground-or-not basic formula, e.g. for query arguments.
BasicFormula parse_basic_formula(std::string_view text);

}  // namespace gpdb

#endif  // GPDB_PARSER_HPP
