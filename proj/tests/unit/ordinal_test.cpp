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

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/ordinal_model.hpp"
#include "tlyndon/errors.hpp"
#include "tlyndon/ordinal.hpp"

namespace tlyndon {
namespace {

Ordinal O(std::string_view s) { return parse_ordinal(s); }
const Ordinal w = Ordinal::omega();

TEST(OrdinalAdd, Examples) {
  EXPECT_EQ(Ordinal(1) + w, w);
  EXPECT_EQ(w + 1, O("w+1"));
  EXPECT_EQ(O("w+1") + w, O("w*2"));
  EXPECT_NE(Ordinal(1) + w, w + 1);
}

TEST(OrdinalMul, Examples) {
  EXPECT_EQ(O("w+1") * w, O("w^2"));
  EXPECT_EQ(O("w*2+1") * w, O("w^2"));
  EXPECT_EQ(O("w*2+1") * w + w, O("w^2+w"));
  EXPECT_EQ(Ordinal(2) * w, w);
  EXPECT_EQ(w * 2, O("w*2"));
  // (w^n+1)*w + 1 = w^(n+1) + 1
  for (std::uint32_t n = 1; n < 6; ++n)
    EXPECT_EQ((Ordinal::omega_power(n) + 1) * w + 1, Ordinal::omega_power(n + 1) + 1);
}

TEST(OrdinalCompare, Examples) {
  EXPECT_LT(w, w + 1);
  EXPECT_GT(O("w^2"), O("w*5+3"));
  EXPECT_EQ(Ordinal(0) <=> Ordinal(0), std::strong_ordering::equal);
  EXPECT_LT(Ordinal(7), w);
}

TEST(OrdinalSub, Examples) {
  EXPECT_EQ(sub_left(O("w*3+2"), O("w*3+2")), Ordinal(0));
  EXPECT_EQ(sub_left(O("w+1"), O("w*2")), w);
  EXPECT_EQ(sub_left(Ordinal(3), w), w);
  EXPECT_EQ(sub_left(Ordinal(3), Ordinal(10)), Ordinal(7));
  EXPECT_THROW(sub_left(w, Ordinal(3)), std::domain_error);
}

TEST(OrdinalDiv, Examples) {
  auto [q1, r1] = div_left(O("w^2"), O("w+1"));
  EXPECT_EQ(q1, w);
  EXPECT_EQ(r1, Ordinal(0));
  auto [q2, r2] = div_left(O("w*2+1"), w);
  EXPECT_EQ(q2, Ordinal(2));
  EXPECT_EQ(r2, Ordinal(1));
  auto [q3, r3] = div_left(Ordinal(5), Ordinal(2));
  EXPECT_EQ(q3, Ordinal(2));
  EXPECT_EQ(r3, Ordinal(1));
  EXPECT_THROW(div_left(w, Ordinal(0)), std::domain_error);
}

TEST(OrdinalClassify, Examples) {
  auto c = O("w^2").classify();
  EXPECT_EQ(c.kind, Ordinal::Kind::Limit);
  EXPECT_TRUE(c.is_power_of_omega);
  c = O("w*2").classify();
  EXPECT_EQ(c.kind, Ordinal::Kind::Limit);
  EXPECT_FALSE(c.is_power_of_omega);
  c = Ordinal(1).classify();
  EXPECT_EQ(c.kind, Ordinal::Kind::Successor);
  EXPECT_TRUE(c.is_power_of_omega);
  EXPECT_EQ(Ordinal(0).classify().kind, Ordinal::Kind::Zero);
  EXPECT_FALSE(Ordinal(0).classify().is_power_of_omega);
  EXPECT_FALSE(O("w+1").classify().is_power_of_omega);
}

TEST(OrdinalFormat, Examples) {
  EXPECT_EQ(format_ordinal(Ordinal::omega_power(2, 3) + w + 4), "w^2*3+w+4");
  EXPECT_EQ(format_ordinal(Ordinal(0)), "0");
  EXPECT_EQ(O("w*2+1"), w * 2 + 1);
  EXPECT_EQ(format_ordinal(O("w^3")), "w^3");
}

TEST(OrdinalParse, Rejects) {
  EXPECT_THROW(O(""), ParseError);
  EXPECT_THROW(O("w+w^2"), ParseError);
  EXPECT_THROW(O("w*0"), ParseError);
  EXPECT_THROW(O("w^"), ParseError);
  EXPECT_THROW(O("3+x"), ParseError);
}

TEST(OrdinalCanonical, FromTermsRejectsNonCanonical) {
  EXPECT_THROW(Ordinal::from_terms({{0, 3}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(Ordinal::from_terms({{1, 0}}), std::invalid_argument);
  EXPECT_EQ(Ordinal::from_terms({{1, 2}, {0, 3}}), O("w*2+3"));
}

TEST(OrdinalBig, CoefficientsDoNotOverflow) {
  Ordinal a = Ordinal::omega_power(1, BigInt(1) << 100);
  EXPECT_EQ((a + a).terms().front().coefficient, BigInt(1) << 101);
  EXPECT_EQ(parse_ordinal(format_ordinal(a)), a);
}

TEST(OrdinalProperty, FormatRoundTrip) {
  ExprGenerator gen(11);
  for (int i = 0; i < 500; ++i) {
    const Ordinal a = testing::random_ordinal(gen, 9, 4);
    EXPECT_EQ(parse_ordinal(format_ordinal(a)), a);
  }
}

TEST(OrdinalProperty, TupleModelAgreement) {
  ExprGenerator gen(12);
  for (int i = 0; i < 2000; ++i) {
    testing::Triple x, y;
    for (auto& c : x.c) c = static_cast<std::uint64_t>(gen.uniform(0, 5));
    for (auto& c : y.c) c = static_cast<std::uint64_t>(gen.uniform(0, 5));
    const Ordinal a = testing::to_ordinal(x), b = testing::to_ordinal(y);
    ASSERT_EQ(a < b, testing::model_less(x, y));
    ASSERT_EQ(a + b, testing::to_ordinal(testing::model_add(x, y)));
    if (auto m = testing::model_mul(x, y)) ASSERT_EQ(a * b, testing::to_ordinal(*m));
  }
}

TEST(OrdinalProperty, Identities) {
  ExprGenerator gen(13);
  for (int i = 0; i < 1000; ++i) {
    const Ordinal a = testing::random_ordinal(gen), b = testing::random_ordinal(gen),
                  c = testing::random_ordinal(gen);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (a <= b) ASSERT_EQ(a + sub_left(a, b), b);
    if (!b.is_zero()) {
      auto [q, r] = div_left(a, b);
      ASSERT_EQ(b * q + r, a);
      ASSERT_LT(r, b);
    }
  }
}

}  // namespace
}  // namespace tlyndon
