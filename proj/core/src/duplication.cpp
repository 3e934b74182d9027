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

#include "tlyndon/duplication.hpp"

#include <vector>

namespace tlyndon {

RatExpr tau(const RatExpr& e) {
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      return e;
    case RatExpr::Kind::Concat: {
      std::vector<RatExpr> parts;
      parts.reserve(e.children().size());
      for (const auto& c : e.children()) parts.push_back(tau(c));
      return RatExpr::concat(std::move(parts));
    }
    case RatExpr::Kind::Omega: {
      RatExpr body = tau(e.body());
      return RatExpr::concat(body, RatExpr::omega(body));
    }
  }
  return e;
}

}  // namespace tlyndon
