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

#include "tlyndon/structural.hpp"

#include <stdexcept>
#include <vector>

#include "tlyndon/errors.hpp"

namespace tlyndon {

Factor concat_pp(const Factor& left, const Factor& right, const Alphabet& alphabet) {
  const auto order = compare(left.prime, right.prime, alphabet);
  if (order.kind == CompareOutcome::Kind::Equal)
    return {right.prime, left.exponent + right.exponent};
  if (order.lex() == std::weak_ordering::greater)
    throw std::invalid_argument("concat_pp: " + format_expr(left.prime) + " is above " +
                                format_expr(right.prime));
  const RatExpr head = power(left.prime, left.exponent);
  if (word_equal(RatExpr::concat(head, right.prime), right.prime, alphabet))
    return {right.prime, right.exponent};
  return {RatExpr::concat(head, power(right.prime, right.exponent)), Ordinal(1)};
}

Factorization fact_product(const Factorization& fx, const Factorization& fy,
                           const Alphabet& alphabet) {
  Factorization out = fx;
  for (const auto& block : fy) {
    out.push_back(block);
    while (out.size() >= 2 && lex_le(out[out.size() - 2].prime, out.back().prime, alphabet)) {
      Factor merged = concat_pp(out[out.size() - 2], out.back(), alphabet);
      out.pop_back();
      out.back() = std::move(merged);
    }
  }
  return out;
}

CircularResult circular_fact(const Factorization& blocks, const Alphabet& alphabet) {
  if (blocks.empty()) throw std::invalid_argument("circular_fact: no blocks");
  struct Run {
    Factor block;
    std::size_t last;  // original index of the final block in this run
  };
  std::vector<Run> ring;
  for (std::size_t i = 0; i < blocks.size(); ++i) ring.push_back({blocks[i], i});

  while (ring.size() > 1) {
    const std::size_t m = ring.size();
    std::size_t at = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (lex_le(ring[i].block.prime, ring[(i + 1) % m].block.prime, alphabet)) {
        at = i;
        break;
      }
    }
    if (at == m) throw InvariantViolation("circular_fact: cyclically decreasing blocks");
    const std::size_t nx = (at + 1) % m;
    Run merged{concat_pp(ring[at].block, ring[nx].block, alphabet), ring[nx].last};
    ring[at] = std::move(merged);
    ring.erase(ring.begin() + static_cast<long>(nx));
  }

  const std::size_t k = ring.front().last;
  const Factor& v = ring.front().block;
  if (!lex_le(v.prime, blocks[k].prime, alphabet))
    throw InvariantViolation("circular_fact: " + format_expr(v.prime) + " is above u_k = " +
                             format_expr(blocks[k].prime));
  return {k + 1, v};
}

Factorization fact_omega(const Factorization& fx, const Alphabet& alphabet) {
  if (fx.empty()) throw std::invalid_argument("fact_omega: empty factorization");
  if (fx.size() == 1) return {{fx.front().prime, fx.front().exponent * Ordinal::omega()}};
  const auto [k, v] = circular_fact(fx, alphabet);
  const Factor& uk = fx[k - 1];
  Factorization out(fx.begin(), fx.begin() + static_cast<long>(k));
  if (compare(v.prime, uk.prime, alphabet).kind == CompareOutcome::Kind::Equal) {
    out.back() = {v.prime, uk.exponent + v.exponent * Ordinal::omega()};
  } else {
    out.push_back({v.prime, v.exponent * Ordinal::omega()});
  }
  return out;
}

Factorization factorize_structural(const RatExpr& e, const Alphabet& alphabet) {
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      return {{e, Ordinal(1)}};
    case RatExpr::Kind::Concat: {
      Factorization acc;
      for (const auto& c : e.children()) acc = fact_product(acc, factorize_structural(c, alphabet), alphabet);
      return acc;
    }
    case RatExpr::Kind::Omega:
      return fact_omega(factorize_structural(e.body(), alphabet), alphabet);
  }
  return {};
}

}  // namespace tlyndon
