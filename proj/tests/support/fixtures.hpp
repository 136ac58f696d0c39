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

#ifndef GPDB_TESTS_FIXTURES_HPP
#define GPDB_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gpdb/ast.hpp"
#include "gpdb/parser.hpp"

#ifndef GPDB_FIXTURE_DIR
#error "GPDB_FIXTURE_DIR must point at the fixture directory"
#endif

namespace gpdb::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(GPDB_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture: " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline GpProgram load_fixture(const std::string& name) {
  return parse_program(read_fixture(name));
}

}  // namespace gpdb::testing

#endif  // GPDB_TESTS_FIXTURES_HPP
