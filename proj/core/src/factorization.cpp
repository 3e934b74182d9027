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

#include "tlyndon/factorization.hpp"

#include <stdexcept>

namespace tlyndon {

std::string format_factor(const Factor& f) {
  std::string out;
  if (f.prime.is_letter()) {
    out += f.prime.symbol();
  } else {
    out += '(' + format_expr(f.prime) + ')';
  }
  return out + "^[" + format_ordinal(f.exponent) + "]";
}

std::string format_factorization(const Factorization& f) {
  std::string out;
  for (const auto& factor : f) {
    if (!out.empty()) out += " * ";
    out += format_factor(factor);
  }
  return out;
}

RatExpr product(const Factorization& f) {
  if (f.empty()) throw std::invalid_argument("empty factorization");
  std::vector<RatExpr> parts;
  for (const auto& factor : f) parts.push_back(power(factor.prime, factor.exponent));
  return RatExpr::concat(std::move(parts));
}

bool same_factorization(const Factorization& a, const Factorization& b,
                        const Alphabet& alphabet) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].exponent != b[i].exponent) return false;
    if (!word_equal(a[i].prime, b[i].prime, alphabet)) return false;
  }
  return true;
}

}  // namespace tlyndon
