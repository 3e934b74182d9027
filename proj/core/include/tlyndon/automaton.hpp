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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlyndon/ordinal.hpp"
#include "tlyndon/word.hpp"

namespace tlyndon {

/// Letter rank reported for a state without a successor. Smaller than every
/// alphabet rank.
inline constexpr int kEndMarker = -1;

struct Edge {
  int label;  // alphabet rank
  char symbol;
  int target;

  bool operator==(const Edge&) const = default;
};

/// Strongly deterministic automaton over states 0..n that accepts a single
/// transfinite word (or, for a sharp automaton, all powers of one word).
/// Limit transitions are keyed by their state interval [lo, hi].
class Automaton {
 public:
  using Interval = std::pair<int, int>;

  Automaton(int n, std::vector<std::optional<Edge>> successors, std::map<Interval, int> limits,
            Alphabet alphabet, int initial = 0, int final_state = -1);

  int n() const noexcept { return n_; }
  int state_count() const noexcept { return n_ + 1; }
  int initial() const noexcept { return initial_; }
  int final_state() const noexcept { return final_; }
  bool is_sharp() const noexcept { return sharp_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  const std::optional<Edge>& successor(int q) const { return succ_.at(static_cast<std::size_t>(q)); }
  /// Rank of the letter read from q, or kEndMarker.
  int letter_leaving(int q) const;
  std::optional<int> limit_target(int lo, int hi) const;
  const std::map<Interval, int>& limits() const noexcept { return limits_; }

  /// Expression this automaton was compiled from, if any.
  const std::optional<RatExpr>& source() const noexcept { return source_; }

 private:
  friend Automaton compile(const RatExpr&, const Alphabet&);
  friend Automaton sub_automaton(const Automaton&, int, int);
  friend Automaton sharp_automaton(const Automaton&, int, int);

  int n_;
  std::vector<std::optional<Edge>> succ_;
  std::map<Interval, int> limits_;
  Alphabet alphabet_;
  int initial_;
  int final_;
  bool sharp_ = false;
  std::optional<RatExpr> source_;
};

/// State s sits just before token s of the expression (letters and w).
/// A letter token at i gives i -a-> i+1. A w token at i whose body begins
/// with letter a at token j-1 gives i -a-> j and the limit [j, i] -> i+1.
Automaton compile(const RatExpr& e, const Alphabet& alphabet = Alphabet::standard());

/// True when some backwards transition k -> k' has k' <= q <= k.
bool in_loop(const Automaton& a, int q);

/// _iA_j: initial i, final j, successor of j removed, only the limits that
/// lie inside [i, j]. Numbering is kept. Throws std::invalid_argument when
/// i >= j or i lies in a loop.
Automaton sub_automaton(const Automaton& a, int i, int j);

/// _iA_j^#: sub_automaton plus j -a-> i+1 (a read from i) and the limit
/// [i+1, j] -> j.
Automaton sharp_automaton(const Automaton& a, int i, int j);

/// Word read from state q to the final state of a compiled automaton;
/// nullopt at the final state. Throws std::invalid_argument if the
/// automaton has no source expression.
std::optional<RatExpr> suffix_word(const Automaton& a, int q);

struct FirstVisit {
  Ordinal position;
  RatExpr prefix;
};

/// Position of the first visit of state s (1 <= s <= n) and the word read
/// up to it.
FirstVisit first_visit_prefix(const Automaton& a, int s);

/// Ordinal position of the first visit of each state 0..n.
std::vector<Ordinal> first_visit_positions(const Automaton& a);

/// Structural checks on a single-word automaton. Empty when all hold.
std::vector<std::string> validate(const Automaton& a);

/// Expression with state numbers between tokens, e.g. "(0a1w2b)3w4a5w6".
std::string numbered_word(const RatExpr& e);

/// Human-readable listing of states and transitions.
std::string describe(const Automaton& a);

std::string to_dot(const Automaton& a);

}  // namespace tlyndon
