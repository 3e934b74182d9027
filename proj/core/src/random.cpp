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

#include "tlyndon/random.hpp"

namespace tlyndon {

RatExpr ExprGenerator::of_size(int size, int max_depth) {
  if (size <= 1) return RatExpr::letter(letter());
  if (max_depth > 0 && uniform(0, 99) < 35) return RatExpr::omega(of_size(size - 1, max_depth - 1));
  const int left = uniform(1, size - 1);
  RatExpr head = of_size(left, max_depth);
  return RatExpr::concat(head, of_size(size - left, max_depth));
}

RatExpr ExprGenerator::operator()(int max_size, int max_depth) {
  return of_size(uniform(1, max_size), max_depth);
}

std::string ExprGenerator::word(int min_len, int max_len) {
  std::string w(static_cast<std::size_t>(uniform(min_len, max_len)), 'a');
  for (char& c : w) c = letter();
  return w;
}

}  // namespace tlyndon
