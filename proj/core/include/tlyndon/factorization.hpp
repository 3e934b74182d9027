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

#include <string>
#include <vector>

#include "tlyndon/ordinal.hpp"
#include "tlyndon/word.hpp"

namespace tlyndon {

struct Factor {
  RatExpr prime;
  Ordinal exponent;
};

/// Prime powers in order; the primes are strictly decreasing.
using Factorization = std::vector<Factor>;

/// "u^[alpha]" for one factor; the prime is parenthesized unless it is a
/// single letter.
std::string format_factor(const Factor& f);
/// Factors joined by " * ".
std::string format_factorization(const Factorization& f);

/// Concatenation of the prime powers. Throws std::invalid_argument when f
/// is empty.
RatExpr product(const Factorization& f);

/// Same length, word-equal primes and equal exponents, block by block.
bool same_factorization(const Factorization& a, const Factorization& b,
                        const Alphabet& alphabet = Alphabet::standard());

}  // namespace tlyndon
