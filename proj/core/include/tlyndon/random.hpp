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

#include <cstdint>
#include <random>
#include <string>

#include "tlyndon/word.hpp"

namespace tlyndon {

/// Seeded generator of random rational expressions over the first
/// `letters` letters of the standard alphabet.
class ExprGenerator {
 public:
  explicit ExprGenerator(std::uint64_t seed, int letters = 3) : rng_(seed), letters_(letters) {}

  /// Exactly `size` tokens, w-nesting at most max_depth.
  RatExpr of_size(int size, int max_depth);
  /// Size uniform in [1, max_size].
  RatExpr operator()(int max_size = 12, int max_depth = 3);
  /// Finite word with length uniform in [min_len, max_len].
  std::string word(int min_len, int max_len);

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  char letter() { return static_cast<char>('a' + uniform(0, letters_ - 1)); }

  std::mt19937_64 rng_;
  int letters_;
};

}  // namespace tlyndon
