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

#include "tlyndon/ordinal.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tlyndon/errors.hpp"

namespace tlyndon {

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back({0, BigInt(n)});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1)
      throw std::invalid_argument("ordinal coefficient must be positive");
    if (i > 0 && terms[i - 1].exponent <= terms[i].exponent)
      throw std::invalid_argument("ordinal exponents must strictly decrease");
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal Ordinal::omega_power(std::uint32_t k, BigInt coefficient) {
  if (coefficient < 1) throw std::invalid_argument("ordinal coefficient must be positive");
  Ordinal out;
  out.terms_.push_back({k, std::move(coefficient)});
  return out;
}

BigInt Ordinal::finite_part() const {
  if (!terms_.empty() && terms_.back().exponent == 0) return terms_.back().coefficient;
  return 0;
}

Ordinal::Classification Ordinal::classify() const {
  if (terms_.empty()) return {Kind::Zero, false};
  const bool power = terms_.size() == 1 && terms_.front().coefficient == 1;
  const Kind kind = terms_.back().exponent == 0 ? Kind::Successor : Kind::Limit;
  return {kind, power};
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].exponent != y[i].exponent) return x[i].exponent <=> y[i].exponent;
    if (x[i].coefficient != y[i].coefficient)
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const std::uint32_t lead = b.terms_.front().exponent;
  Ordinal out;
  auto it = b.terms_.begin();
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) {
      out.terms_.push_back(t);
    } else if (t.exponent == lead) {
      out.terms_.push_back({lead, t.coefficient + it->coefficient});
      ++it;
      break;
    } else {
      break;
    }
  }
  out.terms_.insert(out.terms_.end(), it, b.terms_.end());
  return out;
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::uint32_t lead = a.terms_.front().exponent;
  const BigInt& lead_coef = a.terms_.front().coefficient;
  Ordinal out;
  for (const auto& t : b.terms_) {
    if (t.exponent > 0) {
      // a * w^f = w^(lead + f)
      out = out + Ordinal::omega_power(lead + t.exponent, t.coefficient);
    } else {
      // a * d = w^lead * (c*d) + tail(a)
      Ordinal piece;
      piece.terms_.push_back({lead, lead_coef * t.coefficient});
      piece.terms_.insert(piece.terms_.end(), a.terms_.begin() + 1, a.terms_.end());
      out = out + piece;
    }
  }
  return out;
}

Ordinal sub_left(const Ordinal& lo, const Ordinal& hi) {
  if (lo > hi) throw std::domain_error("ordinal subtraction underflow");
  const auto& x = lo.terms();
  const auto& y = hi.terms();
  std::size_t i = 0;
  while (i < x.size() && x[i] == y[i]) ++i;
  if (i == x.size()) return Ordinal::from_terms({y.begin() + static_cast<long>(i), y.end()});
  // x[i] < y[i]: either same exponent with a smaller coefficient, or a
  // smaller exponent which is swallowed by y[i].
  std::vector<Ordinal::Term> rest;
  if (x[i].exponent == y[i].exponent) {
    rest.push_back({y[i].exponent, y[i].coefficient - x[i].coefficient});
    rest.insert(rest.end(), y.begin() + static_cast<long>(i) + 1, y.end());
  } else {
    rest.assign(y.begin() + static_cast<long>(i), y.end());
  }
  return Ordinal::from_terms(std::move(rest));
}

Division div_left(const Ordinal& value, const Ordinal& divisor) {
  if (divisor.is_zero()) throw std::domain_error("ordinal division by zero");
  const std::uint32_t lead = divisor.degree();
  const BigInt& lead_coef = divisor.terms().front().coefficient;
  const std::vector<Ordinal::Term> tail(divisor.terms().begin() + 1, divisor.terms().end());

  // Terms above the divisor's degree come from divisor * w^f with f >= 1.
  std::vector<Ordinal::Term> q_terms;
  std::vector<Ordinal::Term> low;
  for (const auto& t : value.terms()) {
    if (t.exponent > lead)
      q_terms.push_back({t.exponent - lead, t.coefficient});
    else
      low.push_back(t);
  }
  const Ordinal rest = Ordinal::from_terms(std::move(low));

  BigInt count = 0;
  if (!rest.is_zero() && rest.degree() == lead) {
    const BigInt& c = rest.terms().front().coefficient;
    count = c / lead_coef;
    if (count * lead_coef == c) {
      const Ordinal rest_tail = Ordinal::from_terms({rest.terms().begin() + 1, rest.terms().end()});
      if (Ordinal::from_terms(tail) > rest_tail) count -= 1;
    }
  }
  Ordinal remainder = rest;
  if (count > 0) {
    q_terms.push_back({0, count});
    remainder = sub_left(divisor * Ordinal::omega_power(0, count), rest);
  }
  return {Ordinal::from_terms(std::move(q_terms)), std::move(remainder)};
}

std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent == 0) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient != 1) out += "*" + t.coefficient.str();
  }
  return out;
}

std::string Ordinal::to_string() const { return format_ordinal(*this); }

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << format_ordinal(a); }

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    skip_ws();
    if (at_end()) fail("empty ordinal");
    if (peek() == '0' && is_lone_zero()) {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("unexpected input after 0");
      return {};
    }
    std::vector<Ordinal::Term> terms;
    for (;;) {
      const std::size_t start = pos_;
      Ordinal::Term term = parse_term();
      if (!terms.empty() && terms.back().exponent <= term.exponent)
        throw ParseError("exponents must strictly decrease", start);
      terms.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') fail("expected '+'");
      ++pos_;
      skip_ws();
    }
    return Ordinal::from_terms(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool is_lone_zero() const {
    std::size_t p = pos_ + 1;
    return p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  bool accept_omega() {
    if (!at_end() && peek() == 'w') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 2) == "\xCF\x89") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  BigInt parse_natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a decimal number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Ordinal::Term parse_term() {
    if (!accept_omega()) {
      const std::size_t start = pos_;
      BigInt c = parse_natural();
      if (c < 1) throw ParseError("coefficient must be at least 1", start);
      return {0, std::move(c)};
    }
    std::uint32_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t start = pos_;
      BigInt k = parse_natural();
      if (k > 0xFFFFFFFFu) throw ParseError("exponent out of range", start);
      exponent = static_cast<std::uint32_t>(k);
    }
    BigInt coef = 1;
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      const std::size_t start = pos_;
      coef = parse_natural();
      if (coef < 1) throw ParseError("coefficient must be at least 1", start);
    }
    return {exponent, std::move(coef)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

}  // namespace tlyndon
