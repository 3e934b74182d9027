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

#include "tlyndon/word.hpp"

namespace tlyndon {

/// tau(a) = a, tau(xy) = tau(x)tau(y), tau(x^w) = tau(x)tau(x)^w.
/// Denotes the same word; every w-group is preceded by a literal copy of
/// its body.
RatExpr tau(const RatExpr& e);

/// Number of letter and w tokens.
inline std::size_t size(const RatExpr& e) { return e.token_count(); }
/// Maximum nesting of w.
inline std::size_t depth(const RatExpr& e) { return e.omega_depth(); }

}  // namespace tlyndon
