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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlyndon/factorization.hpp"
#include "tlyndon/ordinal.hpp"
#include "tlyndon/word.hpp"

namespace tlyndon {

// Finite words are plain strings over the alphabet's letters.

/// Duval's algorithm: non-increasing primes whose concatenation is w.
std::vector<std::string> duval_factorize(std::string_view w,
                                         const Alphabet& alphabet = Alphabet::standard());

/// Exhaustive search over all splittings into primes, keeping the
/// non-increasing ones. Throws std::invalid_argument when |w| > 14 or when
/// the search does not find exactly one.
std::vector<std::string> brute_force_factorize(std::string_view w,
                                               const Alphabet& alphabet = Alphabet::standard());

/// w is strictly smaller than each of its proper suffixes.
bool is_prime_finite(std::string_view w, const Alphabet& alphabet = Alphabet::standard());

std::string longest_prime_prefix_finite(std::string_view w,
                                        const Alphabet& alphabet = Alphabet::standard());

/// The letters of e when its length is finite.
std::optional<std::string> as_finite_word(const RatExpr& e);

struct PrimitiveRoot {
  RatExpr root;
  Ordinal exponent;
};

/// Shortest y with e = y^alpha among the candidate lengths: divisors of
/// the leading coefficient of |e| and the first-visit positions of the
/// compiled automaton. (e, 1) when no candidate works.
PrimitiveRoot primitive_root(const RatExpr& e, const Alphabet& alphabet = Alphabet::standard());

struct PrimeVerdict {
  bool prime;
  /// State of compile(e) whose suffix is smaller than e, if any.
  std::optional<int> smaller_suffix_state;
  /// Set when e is a proper power.
  std::optional<PrimitiveRoot> root;
};

PrimeVerdict prime_verdict(const RatExpr& e, const Alphabet& alphabet = Alphabet::standard());

/// e is primitive and e <=lex each of its proper suffixes.
bool is_prime_rational(const RatExpr& e, const Alphabet& alphabet = Alphabet::standard());

/// Checks a factorization of input: non-empty, primes strictly decreasing,
/// every prime prime, exponents nonzero, product equal to the input.
/// Returns one message per violation.
std::vector<std::string> check_factorization(const Factorization& f, const RatExpr& input,
                                             const Alphabet& alphabet = Alphabet::standard());

}  // namespace tlyndon
