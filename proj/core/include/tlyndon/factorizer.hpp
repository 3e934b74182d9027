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
#include <string>
#include <string_view>
#include <vector>

#include "tlyndon/automaton.hpp"
#include "tlyndon/factorization.hpp"
#include "tlyndon/sync_runner.hpp"
#include "tlyndon/word.hpp"

namespace tlyndon {

enum class StepCase { C1a, C1b, C1c, C2a, C2b, C3 };

std::string_view case_name(StepCase c);

struct StepEvent {
  PairState leading;  // (k, k') when the case was decided
  StepCase kind;
  int i;
  int j;  // after the step
  std::vector<PairState> history;  // after the step; filled when requested
};

struct FactorizerOptions {
  const Alphabet* alphabet = &Alphabet::standard();
  /// 0: none. 1: cheap checks (i outside loops, j increasing, Case 3
  /// ordering). 2: also primality of each candidate and the shape of the
  /// word read so far. Violations throw InvariantViolation.
  int debug_level = 0;
  bool record_events = false;
  bool record_history = false;
};

struct StateFactorization {
  RatExpr input;
  RatExpr duplicated;  // tau(input)
  Automaton automaton;  // compile(duplicated)
  std::vector<int> q_main;  // sorted
  std::vector<int> q_secondary;  // sorted
  std::size_t steps = 0;
  std::vector<StepEvent> events;
};

/// Main and secondary cut states of the automaton of tau(e).
StateFactorization factorize_states(const RatExpr& e, const FactorizerOptions& options = {});

/// tau(e) with a main marker before the token of each main state and a
/// secondary marker "|" before the token of each secondary state. A state
/// sitting on a w token marks the end of the group's first pass and is
/// written inside the parentheses. Main markers are "‖", or "||" in ASCII.
std::string marked_expression(const StateFactorization& s, bool ascii = false);

/// Prime powers read off the cut states. Primes are factors of the input
/// expression.
Factorization extract_factorization(const StateFactorization& s);

Factorization factorize(const RatExpr& e, const Alphabet& alphabet = Alphabet::standard());

}  // namespace tlyndon
