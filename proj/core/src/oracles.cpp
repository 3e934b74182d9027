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

#include "tlyndon/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tlyndon/automaton.hpp"
#include "tlyndon/duplication.hpp"

namespace tlyndon {

namespace {

std::vector<int> ranks(std::string_view w, const Alphabet& alphabet) {
  std::vector<int> r;
  r.reserve(w.size());
  for (char c : w) {
    const int k = alphabet.rank(c);
    if (k < 0) throw std::invalid_argument(std::string("letter '") + c + "' is not in the alphabet");
    r.push_back(k);
  }
  return r;
}

// Lexicographic order with a proper prefix below.
bool finite_less(std::string_view x, std::string_view y, const Alphabet& alphabet) {
  const std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i) {
    const int a = alphabet.rank(x[i]);
    const int b = alphabet.rank(y[i]);
    if (a != b) return a < b;
  }
  return x.size() < y.size();
}

}  // namespace

std::vector<std::string> duval_factorize(std::string_view w, const Alphabet& alphabet) {
  if (w.empty()) throw std::invalid_argument("duval_factorize: empty word");
  const std::vector<int> s = ranks(w, alphabet);
  const std::size_t n = s.size();
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && s[k] <= s[j]) {
      k = s[k] < s[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.substr(i, j - k));
      i += j - k;
    }
  }
  return out;
}

bool is_prime_finite(std::string_view w, const Alphabet& alphabet) {
  if (w.empty()) return false;
  ranks(w, alphabet);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!finite_less(w, w.substr(i), alphabet)) return false;
  return true;
}

std::vector<std::string> brute_force_factorize(std::string_view w, const Alphabet& alphabet) {
  if (w.empty() || w.size() > 14)
    throw std::invalid_argument("brute_force_factorize: need 1 <= |w| <= 14");
  std::vector<std::vector<std::string>> found;
  std::vector<std::string> current;
  std::function<void(std::size_t)> search = [&](std::size_t at) {
    if (at == w.size()) {
      found.push_back(current);
      return;
    }
    for (std::size_t end = at + 1; end <= w.size(); ++end) {
      const std::string_view piece = w.substr(at, end - at);
      if (!is_prime_finite(piece, alphabet)) continue;
      if (!current.empty() && finite_less(current.back(), piece, alphabet)) continue;
      current.emplace_back(piece);
      search(end);
      current.pop_back();
    }
  };
  search(0);
  if (found.size() != 1)
    throw std::invalid_argument("brute_force_factorize: " + std::to_string(found.size()) +
                                " non-increasing prime factorizations");
  return found.front();
}

std::string longest_prime_prefix_finite(std::string_view w, const Alphabet& alphabet) {
  for (std::size_t len = w.size(); len > 0; --len)
    if (is_prime_finite(w.substr(0, len), alphabet)) return std::string(w.substr(0, len));
  throw std::invalid_argument("longest_prime_prefix_finite: empty word");
}

std::optional<std::string> as_finite_word(const RatExpr& e) {
  if (!e.length().is_finite()) return std::nullopt;
  std::string out;
  std::function<void(const RatExpr&)> walk = [&](const RatExpr& x) {
    if (x.is_letter()) {
      out += x.symbol();
    } else {
      for (const auto& c : x.children()) walk(c);
    }
  };
  walk(e);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr unsigned kMaxDivisor = 1u << 16;

std::vector<Ordinal> root_lengths(const RatExpr& e, const Alphabet& alphabet) {
  std::vector<Ordinal> out;
  const Ordinal& len = e.length();
  // Finite exponents: |y|*d = |e| forces |y| = w^k*(c/d) + tail.
  const auto& terms = len.terms();
  const BigInt c = terms.front().coefficient;
  for (unsigned d = 2; d <= kMaxDivisor && BigInt(d) <= c; ++d) {
    if (c % d != 0) continue;
    std::vector<Ordinal::Term> t = terms;
    t.front().coefficient = c / d;
    out.push_back(Ordinal::from_terms(std::move(t)));
  }
  // Transfinite exponents: cut positions of the duplicated automaton.
  const Automaton a = compile(tau(e), alphabet);
  for (const Ordinal& p : first_visit_positions(a))
    if (!p.is_zero() && p < len) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PrimitiveRoot primitive_root(const RatExpr& e, const Alphabet& alphabet) {
  for (const Ordinal& mu : root_lengths(e, alphabet)) {
    const auto [alpha, rest] = div_left(e.length(), mu);
    if (!rest.is_zero() || alpha < Ordinal(2)) continue;
    const RatExpr y = prefix_to(e, mu);
    try {
      if (!word_equal(power(y, alpha), e, alphabet)) continue;
    } catch (const std::length_error&) {
      continue;
    }
    // y may itself be a power.
    PrimitiveRoot inner = primitive_root(y, alphabet);
    return {inner.root, inner.exponent * alpha};
  }
  return {e, Ordinal(1)};
}

PrimeVerdict prime_verdict(const RatExpr& e, const Alphabet& alphabet) {
  const Automaton a = compile(e, alphabet);
  for (int q = 1; q < a.n(); ++q) {
    const RatExpr s = *suffix_word(a, q);
    if (compare(e, s, alphabet).lex() == std::weak_ordering::greater) return {false, q, {}};
  }
  PrimitiveRoot root = primitive_root(e, alphabet);
  if (root.exponent != Ordinal(1)) return {false, std::nullopt, std::move(root)};
  return {true, std::nullopt, std::nullopt};
}

bool is_prime_rational(const RatExpr& e, const Alphabet& alphabet) {
  return prime_verdict(e, alphabet).prime;
}

std::vector<std::string> check_factorization(const Factorization& f, const RatExpr& input,
                                             const Alphabet& alphabet) {
  std::vector<std::string> bad;
  if (f.empty()) {
    bad.emplace_back("empty factorization");
    return bad;
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::string name = format_factor(f[i]);
    if (f[i].exponent.is_zero()) bad.push_back(name + ": zero exponent");
    if (!is_prime_rational(f[i].prime, alphabet)) bad.push_back(name + ": not prime");
    if (i + 1 < f.size() &&
        compare(f[i].prime, f[i + 1].prime, alphabet).lex() != std::weak_ordering::greater)
      bad.push_back(name + ": not above " + format_factor(f[i + 1]));
  }
  if (bad.empty() && !word_equal(product(f), input, alphabet))
    bad.push_back("product " + format_expr(product(f)) + " differs from the input");
  return bad;
}

}  // namespace tlyndon
