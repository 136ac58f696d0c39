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

#include "gpdb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gpdb {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal: digits '.' digits, both parts required.
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (whole.empty() || frac.empty())
      throw std::invalid_argument("malformed decimal literal: " + text);
    for (const std::string* part : {&whole, &frac})
      for (char c : *part)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("malformed decimal literal: " + text);
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    return Rational(mpq_class(num, den));
  }
  // Integer or "p/q". mpq_class validates the digits.
  try {
    mpq_class q(text, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace gpdb
