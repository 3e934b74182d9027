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

#include <cstddef>

#include "tlyndon/factorization.hpp"
#include "tlyndon/word.hpp"

namespace tlyndon {

/// u^alpha v^beta as a single prime power w^gamma, for primes u <=lex v:
///   u = v               -> (v, alpha + beta)
///   u^alpha v = v       -> (v, beta)
///   otherwise           -> (u^alpha v^beta, 1)
/// Throws std::invalid_argument when u >lex v.
Factor concat_pp(const Factor& left, const Factor& right,
                 const Alphabet& alphabet = Alphabet::standard());

/// Factorization of xy from those of x and y.
Factorization fact_product(const Factorization& fx, const Factorization& fy,
                           const Alphabet& alphabet = Alphabet::standard());

struct CircularResult {
  std::size_t k;  // 1-based
  Factor block;   // v^beta
};

/// Index k and the single prime power v^beta equal to the rotation
/// u_{k+1}^{a_{k+1}} ... u_n^{a_n} u_1^{a_1} ... u_k^{a_k}, with v <=lex u_k.
CircularResult circular_fact(const Factorization& blocks,
                             const Alphabet& alphabet = Alphabet::standard());

/// Factorization of x^w from that of x.
Factorization fact_omega(const Factorization& fx, const Alphabet& alphabet = Alphabet::standard());

/// Bottom-up over the expression tree.
Factorization factorize_structural(const RatExpr& e,
                                   const Alphabet& alphabet = Alphabet::standard());

}  // namespace tlyndon
