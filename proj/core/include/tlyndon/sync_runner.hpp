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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tlyndon/automaton.hpp"
#include "tlyndon/ordinal.hpp"

namespace tlyndon {

struct PairState {
  int left;
  int right;

  auto operator<=>(const PairState&) const = default;
};

/// Repetition-free record of the pairs of a product run, in first-visit
/// order, with the ordinal offset of each first visit.
class Trace {
 public:
  /// by_limit: p was reached by limit transitions collapsing the state
  /// intervals `spans` (left, right).
  void push(PairState p, Ordinal position, bool by_limit = false,
            std::pair<Automaton::Interval, Automaton::Interval> spans = {});
  std::optional<std::size_t> index_of(PairState p) const;
  bool contains(PairState p) const { return index_.contains(p); }

  const std::vector<PairState>& pairs() const noexcept { return pairs_; }
  const std::vector<Ordinal>& positions() const noexcept { return positions_; }
  bool reached_by_limit(std::size_t idx) const { return by_limit_.at(idx); }
  const std::pair<Automaton::Interval, Automaton::Interval>& spans(std::size_t idx) const {
    return spans_.at(idx);
  }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  PairState back() const { return pairs_.back(); }

 private:
  std::vector<PairState> pairs_;
  std::vector<Ordinal> positions_;
  std::vector<bool> by_limit_;
  std::vector<std::pair<Automaton::Interval, Automaton::Interval>> spans_;
  std::map<PairState, std::size_t> index_;
};

struct StepOutcome {
  enum class Kind { Advanced, LoopClosed, Diverged, LeftEnded, RightEnded, BothEnded };

  Kind kind;
  /// New leading pair for Advanced/LoopClosed, otherwise the unchanged one.
  PairState pair;
  /// Ranks of the letters leaving the previous leading pair (kEndMarker
  /// when a side has none).
  int left_label = kEndMarker;
  int right_label = kEndMarker;
  /// LoopClosed only: the right component's loop passed through the right
  /// automaton's final state.
  bool right_loop_has_final = false;
  /// LoopClosed only: number of limit collapses applied. More than one
  /// when the pair reached by limits had already been seen.
  std::size_t collapses = 0;
};

/// Synchronized run of two automata. Each step reads one common letter;
/// when the resulting pair is already in the trace, the loop it closes is
/// collapsed by the limit transition of each component, keyed by the set
/// of states that component visits inside the loop.
class SyncRun {
 public:
  SyncRun(const Automaton& left, const Automaton& right, PairState start,
          Ordinal start_position = Ordinal());

  StepOutcome step();

  const Trace& trace() const noexcept { return trace_; }
  PairState leading() const { return trace_.back(); }
  /// Offset of the leading pair from the start of the run.
  const Ordinal& position() const { return trace_.positions().back(); }
  std::size_t steps() const noexcept { return steps_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  int limit_for(const Automaton& a, const std::vector<int>& states, const char* side) const;

  const Automaton& left_;
  const Automaton& right_;
  Trace trace_;
  std::size_t steps_ = 0;
  std::size_t budget_;
};

struct RunResult {
  Trace trace;
  StepOutcome last;
  std::size_t steps;
};

/// Steps from (left.initial, right.initial) until the letters differ or a
/// side ends.
RunResult run_to_divergence(const Automaton& left, const Automaton& right);

}  // namespace tlyndon
