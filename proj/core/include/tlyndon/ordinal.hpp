// Copyright 2026 The tlyndon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tlyndon {

using BigInt = boost::multiprecision::cpp_int;

/// Countable ordinal strictly below w^w, stored in Cantor normal form
///   w^{k_1}*c_1 + ... + w^{k_m}*c_m,   k_1 > ... > k_m,  c_i >= 1.
/// The empty term list is 0. Every constructor and operation returns the
/// canonical form, so structural equality is ordinal equality.
class Ordinal {
 public:
  struct Term {
    std::uint32_t exponent;
    BigInt coefficient;

    bool operator==(const Term&) const = default;
  };

  enum class Kind { Zero, Successor, Limit };

  struct Classification {
    Kind kind;
    bool is_power_of_omega;  // w^k for some k >= 0, so 1 counts
  };

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT(google-explicit-constructor)

  /// Builds from arbitrary terms; sorts nothing, but validates strict
  /// exponent decrease and positive coefficients.
  static Ordinal from_terms(std::vector<Term> terms);
  static Ordinal omega_power(std::uint32_t k, BigInt coefficient = 1);
  static Ordinal omega() { return omega_power(1); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept {
    return terms_.empty() || terms_.front().exponent == 0;
  }
  /// Leading exponent; 0 for the ordinal 0.
  std::uint32_t degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().exponent;
  }
  /// Value of the w^0 term (0 when absent).
  BigInt finite_part() const;

  Classification classify() const;

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);
  Ordinal& operator+=(const Ordinal& b) { return *this = *this + b; }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Unique d with lo + d = hi. Throws std::domain_error when lo > hi.
Ordinal sub_left(const Ordinal& lo, const Ordinal& hi);

struct Division {
  Ordinal quotient;
  Ordinal remainder;
};

/// Left division: value = divisor * quotient + remainder with
/// remainder < divisor. Throws std::domain_error on a zero divisor.
Division div_left(const Ordinal& value, const Ordinal& divisor);

/// Text form "w^2*3+w+4", "0". Inverse of parse_ordinal.
std::string format_ordinal(const Ordinal& a);

/// Accepts the format_ordinal grammar; "ω" is accepted in place of "w".
/// Throws ParseError.
Ordinal parse_ordinal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace tlyndon
