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

// Property checks shared by the GoogleTest suites and the acceptance
// runner. Each returns a Report; a property holds when failures == 0.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/ordinal_model.hpp"
#include "tlyndon/automaton.hpp"
#include "tlyndon/duplication.hpp"
#include "tlyndon/factorizer.hpp"
#include "tlyndon/oracles.hpp"
#include "tlyndon/structural.hpp"

namespace tlyndon::testing {

struct Report {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> samples;

  void fail(const std::string& msg) {
    ++failures;
    if (samples.size() < 5) samples.push_back(msg);
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    std::string s = name + ": " + std::to_string(cases) + " cases, " +
                    std::to_string(failures) + " failures";
    for (const auto& m : samples) s += "\n    " + m;
    return s;
  }
};

/// Runs body(case_index) and turns exceptions into failures.
inline void guarded(Report& r, const std::string& label, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& ex) {
    r.fail(label + ": exception " + ex.what());
  }
}

inline std::vector<std::string> expand(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& factor : f) {
    const auto word = as_finite_word(factor.prime);
    const auto times = factor.exponent.is_finite() ? static_cast<int>(factor.exponent.finite_part())
                                                   : -1;
    if (!word || times < 1) return {"<transfinite>"};
    for (int i = 0; i < times; ++i) out.push_back(*word);
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ".") + p;
  return s;
}

// ---------------------------------------------------------------------------
// Ordinals

inline Report ordinal_identities(std::uint64_t seed, int cases) {
  Report r{"ordinal identities and tuple model"};
  ExprGenerator gen(seed);
  auto triple = [&] {
    Triple t;
    for (auto& c : t.c) c = static_cast<std::uint64_t>(gen.uniform(0, 4));
    return t;
  };
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const Triple x = triple();
    const Triple y = triple();
    const Triple z = triple();
    const Ordinal a = to_ordinal(x);
    const Ordinal b = to_ordinal(y);
    const Ordinal c = to_ordinal(z);
    const std::string label = a.to_string() + ", " + b.to_string() + ", " + c.to_string();
    guarded(r, label, [&] {
      if ((a + b) + c != a + (b + c)) r.fail("add associativity: " + label);
      if ((a * b) * c != a * (b * c)) r.fail("mul associativity: " + label);
      if (a * (b + c) != a * b + a * c) r.fail("left distributivity: " + label);
      if ((a < b) != model_less(x, y) || (a == b) != (x == y)) r.fail("order vs model: " + label);
      if (a + b != to_ordinal(model_add(x, y))) r.fail("add vs model: " + label);
      if (auto m = model_mul(x, y); m && a * b != to_ordinal(*m)) r.fail("mul vs model: " + label);
      const auto& [lo, hi] = a <= b ? std::pair{a, b} : std::pair{b, a};
      const Ordinal d = sub_left(lo, hi);
      if (lo + d != hi) r.fail("subtraction identity: " + label);
      const auto& [tlo, thi] = a <= b ? std::pair{x, y} : std::pair{y, x};
      if (d != to_ordinal(model_sub(tlo, thi))) r.fail("sub vs model: " + label);
      if (!b.is_zero()) {
        const auto [q, rem] = div_left(a, b);
        if (b * q + rem != a || !(rem < b)) r.fail("division identity: " + label);
        if (i % 10 == 0) {
          const auto mq = model_quotient(x, y, 4);
          if (!mq || to_ordinal(*mq) != q) r.fail("quotient vs model: " + label);
        }
      }
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Finite words

inline void finite_word_case(Report& r, const std::string& w, bool brute) {
  ++r.cases;
  guarded(r, w, [&] {
    const RatExpr e = word_expr(w);
    const auto automaton = join(expand(factorize(e)));
    const auto structural = join(expand(factorize_structural(e)));
    const auto duval = join(duval_factorize(w));
    if (automaton != duval || structural != duval)
      r.fail(w + ": automaton " + automaton + ", structural " + structural + ", duval " + duval);
    if (brute) {
      const auto bf = join(brute_force_factorize(w));
      if (bf != duval) r.fail(w + ": brute force " + bf + ", duval " + duval);
    }
  });
}

inline Report finite_sweep(int max_len, int letters) {
  Report r{"all words up to length " + std::to_string(max_len)};
  for (const auto& w : all_words(max_len, letters)) finite_word_case(r, w, true);
  return r;
}

inline Report finite_random(std::uint64_t seed, int cases, int max_len, int letters) {
  Report r{"random finite words"};
  ExprGenerator gen(seed, letters);
  for (int i = 0; i < cases; ++i) finite_word_case(r, gen.word(1, max_len), false);
  return r;
}

// ---------------------------------------------------------------------------
// Rational corpus

inline std::vector<RatExpr> corpus(std::uint64_t seed, int count, int max_size = 12,
                                   int max_depth = 3, int letters = 3) {
  ExprGenerator gen(seed, letters);
  std::vector<RatExpr> out;
  for (int i = 0; i < count; ++i) out.push_back(gen(max_size, max_depth));
  return out;
}

inline Report engine_differential(const std::vector<RatExpr>& exprs) {
  Report r{"automaton engine = structural engine"};
  for (const auto& e : exprs) {
    ++r.cases;
    guarded(r, format_expr(e), [&] {
      const Factorization a = factorize(e);
      const Factorization s = factorize_structural(e);
      if (!same_factorization(a, s))
        r.fail(format_expr(e) + ": " + format_factorization(a) + " vs " + format_factorization(s));
    });
  }
  return r;
}

inline Report factorization_validity(const std::vector<RatExpr>& exprs) {
  Report r{"factorization validity"};
  for (const auto& e : exprs) {
    ++r.cases;
    guarded(r, format_expr(e), [&] {
      for (const auto& msg : check_factorization(factorize(e), e))
        r.fail(format_expr(e) + ": " + msg);
    });
  }
  return r;
}

inline Report step_bound(const std::vector<RatExpr>& exprs) {
  Report r{"step count <= n^3"};
  for (const auto& e : exprs) {
    ++r.cases;
    guarded(r, format_expr(e), [&] {
      const auto s = factorize_states(e);
      const auto n = static_cast<std::size_t>(s.automaton.n());
      if (s.steps > n * n * n)
        r.fail(format_expr(e) + ": " + std::to_string(s.steps) + " steps, n = " +
               std::to_string(n));
    });
  }
  return r;
}

inline std::size_t tau_family_size(int n) {
  RatExpr e = RatExpr::letter('a');
  for (int i = 0; i < n; ++i) e = RatExpr::omega(e);
  return size(tau(e));
}

inline Report duplication_bound(std::uint64_t seed, int cases) {
  Report r{"size(tau(e)) <= 2^depth(e) size(e)"};
  ExprGenerator gen(seed);
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    const RatExpr e = gen(12, 4);
    const RatExpr t = tau(e);
    if (size(t) > (std::size_t{1} << depth(e)) * size(e))
      r.fail(format_expr(e) + ": size(tau) = " + std::to_string(size(t)));
    if (i % 20 == 0 && !word_equal(t, e)) r.fail(format_expr(e) + ": tau changes the word");
  }
  std::size_t t = 1;
  for (int n = 0; n <= 10; ++n) {
    ++r.cases;
    if (tau_family_size(n) != t)
      r.fail("family n=" + std::to_string(n) + ": " + std::to_string(tau_family_size(n)) +
             " != " + std::to_string(t));
    t = 2 * t + 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Closure properties of primes

/// Distinct primes drawn from factorizations of random expressions: the
/// three letters plus longer primes, about half of them of infinite length.
inline std::vector<RatExpr> prime_pool(std::uint64_t seed, std::size_t count, int letters = 3) {
  ExprGenerator gen(seed, letters);
  std::vector<RatExpr> pool;
  for (int c = 0; c < letters; ++c) pool.push_back(RatExpr::letter(static_cast<char>('a' + c)));
  std::size_t infinite = 0;
  while (pool.size() < count) {
    for (const auto& f : factorize(gen(9, 2))) {
      const bool inf = !f.prime.length().is_finite();
      if (f.prime.length() == Ordinal(1) || (inf ? 2 * infinite > count : 2 * (pool.size() - infinite) > count))
        continue;
      if (std::any_of(pool.begin(), pool.end(), [&](const RatExpr& p) { return word_equal(p, f.prime); }))
        continue;
      pool.push_back(f.prime);
      if (inf) ++infinite;
      if (pool.size() == count) break;
    }
  }
  return pool;
}

inline std::vector<Ordinal> sample_exponents() {
  const Ordinal w = Ordinal::omega();
  return {Ordinal(1), Ordinal(2), Ordinal(3), w, w * w};
}

/// Pairs u <lex v of distinct primes from the pool.
template <class Body>
void for_ordered_prime_pairs(ExprGenerator& gen, const std::vector<RatExpr>& pool, int wanted,
                             Body body) {
  int done = 0;
  for (int attempt = 0; done < wanted && attempt < wanted * 20; ++attempt) {
    RatExpr u = pool[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(pool.size()) - 1))];
    RatExpr v = pool[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(pool.size()) - 1))];
    const auto c = compare(u, v);
    if (c.kind == CompareOutcome::Kind::Equal) continue;
    if (c.lex() == std::weak_ordering::greater) std::swap(u, v);
    if (body(u, v)) ++done;
  }
}

inline Report power_then_larger_order(std::uint64_t seed, int cases) {
  Report r{"u^a < u^a v and u^a v <= v"};
  ExprGenerator gen(seed);
  const auto pool = prime_pool(seed, 60);
  const auto exps = sample_exponents();
  for_ordered_prime_pairs(gen, pool, cases, [&](const RatExpr& u, const RatExpr& v) {
    const Ordinal& a = exps[static_cast<std::size_t>(gen.uniform(0, 4))];
    ++r.cases;
    const std::string label = format_expr(u) + " ^ " + a.to_string() + " / " + format_expr(v);
    guarded(r, label, [&] {
      const RatExpr ua = power(u, a);
      const RatExpr uav = RatExpr::concat(ua, v);
      if (compare(ua, uav).lex() != std::weak_ordering::less) r.fail(label + ": u^a not below u^a v");
      if (compare(uav, v).lex() == std::weak_ordering::greater) r.fail(label + ": u^a v above v");
    });
    return true;
  });
  return r;
}

inline Report power_times_larger_prime(std::uint64_t seed, int cases) {
  Report r{"u^a v prime for primes u < v"};
  ExprGenerator gen(seed);
  const auto pool = prime_pool(seed + 1, 60);
  const auto exps = sample_exponents();
  for_ordered_prime_pairs(gen, pool, cases, [&](const RatExpr& u, const RatExpr& v) {
    const Ordinal& a = exps[static_cast<std::size_t>(gen.uniform(0, 4))];
    ++r.cases;
    const RatExpr w = RatExpr::concat(power(u, a), v);
    guarded(r, format_expr(w), [&] {
      if (!is_prime_rational(w)) r.fail(format_expr(w) + " is not prime");
    });
    return true;
  });
  return r;
}

inline Report power_times_power_prime(std::uint64_t seed, int cases) {
  Report r{"u^a v^b prime when u^a v < v"};
  ExprGenerator gen(seed);
  const auto pool = prime_pool(seed + 2, 60);
  const auto exps = sample_exponents();
  const std::vector<Ordinal> betas{Ordinal(1), Ordinal(2), Ordinal::omega()};
  for_ordered_prime_pairs(gen, pool, cases, [&](const RatExpr& u, const RatExpr& v) {
    const Ordinal& a = exps[static_cast<std::size_t>(gen.uniform(0, 4))];
    const RatExpr ua = power(u, a);
    if (compare(RatExpr::concat(ua, v), v).lex() != std::weak_ordering::less) return false;
    ++r.cases;
    const Ordinal& b = betas[static_cast<std::size_t>(gen.uniform(0, 2))];
    const RatExpr w = RatExpr::concat(ua, power(v, b));
    guarded(r, format_expr(w), [&] {
      if (!is_prime_rational(w)) r.fail(format_expr(w) + " is not prime");
    });
    return true;
  });
  return r;
}

inline Report concat_pp_trichotomy(std::uint64_t seed, int cases) {
  Report r{"concat_pp trichotomy"};
  ExprGenerator gen(seed);
  const auto pool = prime_pool(seed + 3, 60);
  const auto exps = sample_exponents();
  for (int i = 0; i < cases; ++i) {
    RatExpr u = pool[static_cast<std::size_t>(gen.uniform(0, 59))];
    RatExpr v = gen.uniform(0, 4) == 0 ? u : pool[static_cast<std::size_t>(gen.uniform(0, 59))];
    if (compare(u, v).lex() == std::weak_ordering::greater) std::swap(u, v);
    const Ordinal& a = exps[static_cast<std::size_t>(gen.uniform(0, 3))];
    const Ordinal& b = exps[static_cast<std::size_t>(gen.uniform(0, 3))];
    ++r.cases;
    const std::string label = "(" + format_expr(u) + ")^" + a.to_string() + " (" +
                              format_expr(v) + ")^" + b.to_string();
    guarded(r, label, [&] {
      const Factor w = concat_pp({u, a}, {v, b});
      const RatExpr whole = RatExpr::concat(power(u, a), power(v, b));
      if (!word_equal(power(w.prime, w.exponent), whole)) r.fail(label + ": product changed");
      if (!is_prime_rational(w.prime)) r.fail(label + ": " + format_expr(w.prime) + " not prime");
      Ordinal want;
      if (word_equal(u, v)) {
        want = a + b;
      } else if (word_equal(RatExpr::concat(power(u, a), v), v)) {
        want = b;
      } else {
        want = Ordinal(1);
      }
      if (w.exponent != want) r.fail(label + ": exponent " + w.exponent.to_string());
    });
  }
  return r;
}

inline Report square_end_extends(std::uint64_t seed, int cases) {
  Report r{"x y^2 prime implies x y^w prime"};
  ExprGenerator gen(seed, 2);
  for (int attempt = 0; r.cases < cases && attempt < cases * 50; ++attempt) {
    const std::string x = gen.word(1, 4);
    const std::string y = gen.word(1, 4);
    if (!is_prime_finite(x + y + y)) continue;
    ++r.cases;
    const RatExpr w = RatExpr::concat(word_expr(x), RatExpr::omega(word_expr(y)));
    guarded(r, format_expr(w), [&] {
      if (!is_prime_rational(w)) r.fail(format_expr(w) + " is not prime");
    });
  }
  return r;
}

inline Report decreasing_product_not_prime(std::uint64_t seed, int cases) {
  Report r{"non-increasing product of >= 2 prime powers is not prime"};
  ExprGenerator gen(seed);
  const auto pool = prime_pool(seed + 4, 60);
  const std::vector<Ordinal> exps{Ordinal(1), Ordinal(2), Ordinal::omega()};
  for (int i = 0; i < cases; ++i) {
    std::vector<RatExpr> primes;
    const int k = gen.uniform(2, 3);
    for (int j = 0; j < k; ++j) primes.push_back(pool[static_cast<std::size_t>(gen.uniform(0, 59))]);
    std::sort(primes.begin(), primes.end(), [](const RatExpr& x, const RatExpr& y) {
      return compare(x, y).lex() == std::weak_ordering::greater;
    });
    if (word_equal(primes.front(), primes.back())) {
      --i;
      continue;
    }
    std::vector<RatExpr> parts;
    for (const auto& p : primes) parts.push_back(power(p, exps[static_cast<std::size_t>(gen.uniform(0, 2))]));
    const RatExpr w = RatExpr::concat(std::move(parts));
    ++r.cases;
    guarded(r, format_expr(w), [&] {
      if (is_prime_rational(w)) r.fail(format_expr(w) + " is prime");
    });
  }
  return r;
}

inline Report power_prefix_raised_letter_prime(std::uint64_t seed, int cases) {
  Report r{"u^a x b prime for u = x a y and b > a"};
  ExprGenerator gen(seed);
  const auto pool = prime_pool(seed + 5, 60);
  const std::vector<Ordinal> exps{Ordinal(1), Ordinal(2), Ordinal::omega()};
  for (int attempt = 0; r.cases < cases && attempt < cases * 20; ++attempt) {
    const RatExpr u = pool[static_cast<std::size_t>(gen.uniform(0, 59))];
    const Automaton au = compile(u);
    const auto cuts = first_visit_positions(au);
    const Ordinal& p = cuts[static_cast<std::size_t>(gen.uniform(0, au.n() - 1))];
    const char a = letter_at(u, p);
    if (a >= 'c') continue;
    const char b = static_cast<char>(gen.uniform(a + 1, 'c'));
    const RatExpr ua = power(u, exps[static_cast<std::size_t>(gen.uniform(0, 2))]);
    const RatExpr w = p.is_zero()
                          ? RatExpr::concat(ua, RatExpr::letter(b))
                          : RatExpr::concat({ua, prefix_to(u, p), RatExpr::letter(b)});
    ++r.cases;
    guarded(r, format_expr(w), [&] {
      if (!is_prime_rational(w)) r.fail(format_expr(w) + " is not prime");
    });
  }
  return r;
}

inline Report smaller_tail_keeps_block(std::uint64_t seed, int cases) {
  Report r{"factorize(u^a x) = (u, a) factorize(x) when x < u"};
  ExprGenerator gen(seed);
  const auto pool = prime_pool(seed + 6, 60);
  const auto exps = sample_exponents();
  for (int attempt = 0; r.cases < cases && attempt < cases * 20; ++attempt) {
    const RatExpr u = pool[static_cast<std::size_t>(gen.uniform(0, 59))];
    const RatExpr x = gen(6, 2);
    if (compare(x, u).kind != CompareOutcome::Kind::StrictlyLess) continue;
    const Ordinal& a = exps[static_cast<std::size_t>(gen.uniform(0, 4))];
    ++r.cases;
    const RatExpr w = RatExpr::concat(power(u, a), x);
    guarded(r, format_expr(w), [&] {
      Factorization want{{u, a}};
      for (auto& f : factorize(x)) want.push_back(f);
      const Factorization got = factorize(w);
      if (!same_factorization(got, want))
        r.fail(format_expr(w) + ": " + format_factorization(got) + ", expected " +
               format_factorization(want));
    });
  }
  return r;
}

inline Report first_factor_longest_prefix(std::uint64_t seed, int cases) {
  Report r{"first factor = longest prime prefix (finite)"};
  ExprGenerator gen(seed);
  for (int i = 0; i < cases; ++i) {
    const std::string w = gen.word(1, 14);
    ++r.cases;
    guarded(r, w, [&] {
      const std::string lp = longest_prime_prefix_finite(w);
      const auto f = factorize(word_expr(w));
      if (as_finite_word(f.front().prime) != lp || duval_factorize(w).front() != lp)
        r.fail(w + ": longest prime prefix " + lp + ", first factor " +
               format_expr(f.front().prime));
    });
  }
  return r;
}

inline Report circular_fact_rotation(std::uint64_t seed, int cases) {
  Report r{"circular_fact: v <=lex u_k and v^b is the rotation"};
  ExprGenerator gen(seed);
  for (int i = 0; i < cases; ++i) {
    const RatExpr e = gen(8, 2);
    ++r.cases;
    guarded(r, format_expr(e), [&] {
      const Factorization f = factorize(e);
      const CircularResult c = circular_fact(f);
      if (compare(c.block.prime, f[c.k - 1].prime).lex() == std::weak_ordering::greater)
        r.fail(format_expr(e) + ": v above u_k");
      Factorization rotated(f.begin() + static_cast<long>(c.k), f.end());
      rotated.insert(rotated.end(), f.begin(), f.begin() + static_cast<long>(c.k));
      if (!word_equal(power(c.block.prime, c.block.exponent), product(rotated)))
        r.fail(format_expr(e) + ": v^b differs from the rotation");
    });
  }
  return r;
}

}  // namespace tlyndon::testing
