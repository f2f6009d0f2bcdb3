// Copyright 2026 The pfg Authors
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

#include "pfg/rational.hpp"

#include <ostream>

#include "pfg/errors.hpp"

namespace pfg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class digits(std::string(whole) + std::string(frac), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(body)) throw DomainError("malformed number '" + std::string(text) + "'");
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::numerator_str() const { return value_.get_num().get_str(10); }

std::string Rational::denominator_str() const { return value_.get_den().get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pfg
