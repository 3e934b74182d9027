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

#include "tlyndon/sync_runner.hpp"

#include <algorithm>
#include <string>

#include "tlyndon/errors.hpp"

namespace tlyndon {

void Trace::push(PairState p, Ordinal position, bool by_limit,
                 std::pair<Automaton::Interval, Automaton::Interval> spans) {
  if (!index_.emplace(p, pairs_.size()).second)
    throw InvariantViolation("trace: pair (" + std::to_string(p.left) + "," +
                             std::to_string(p.right) + ") recorded twice");
  pairs_.push_back(p);
  positions_.push_back(std::move(position));
  by_limit_.push_back(by_limit);
  spans_.push_back(spans);
}

std::optional<std::size_t> Trace::index_of(PairState p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SyncRun::SyncRun(const Automaton& left, const Automaton& right, PairState start,
                 Ordinal start_position)
    : left_(left),
      right_(right),
      budget_(static_cast<std::size_t>(left.state_count()) *
              static_cast<std::size_t>(right.state_count())) {
  trace_.push(start, std::move(start_position));
}

int SyncRun::limit_for(const Automaton& a, const std::vector<int>& states,
                       const char* side) const {
  const auto [lo_it, hi_it] = std::minmax_element(states.begin(), states.end());
  const int lo = *lo_it;
  const int hi = *hi_it;
  std::vector<bool> seen(static_cast<std::size_t>(hi - lo) + 1, false);
  for (int q : states) seen[static_cast<std::size_t>(q - lo)] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvariantViolation(std::string(side) + " loop states are not an interval");
  if (auto t = a.limit_target(lo, hi)) return *t;
  throw InvariantViolation(std::string("no limit transition for ") + side + " states {" +
                           std::to_string(lo) + ".." + std::to_string(hi) + "}");
}

StepOutcome SyncRun::step() {
  const PairState cur = leading();
  const int l = left_.letter_leaving(cur.left);
  const int r = right_.letter_leaving(cur.right);
  using K = StepOutcome::Kind;
  if (l == kEndMarker && r == kEndMarker) return {K::BothEnded, cur, l, r};
  if (l == kEndMarker) return {K::LeftEnded, cur, l, r};
  if (r == kEndMarker) return {K::RightEnded, cur, l, r};
  if (l != r) return {K::Diverged, cur, l, r};

  if (++steps_ > budget_) throw InvariantViolation("product run exceeded its step budget");
  const PairState next{left_.successor(cur.left)->target, right_.successor(cur.right)->target};
  const Ordinal after = position() + Ordinal(1);
  const auto idx = trace_.index_of(next);
  if (!idx) {
    trace_.push(next, after);
    return {K::Advanced, next, l, r};
  }

  // The run is periodic from trace[idx]; collapse the period. The pair the
  // limit transitions lead to may itself be a repeat (a period made of
  // limits), in which case the longer period is collapsed in turn.
  if (trace_.reached_by_limit(*idx))
    throw InvariantViolation("loop entry pair was reached by a limit transition");
  StepOutcome out{K::LoopClosed, next, l, r};
  std::size_t from = *idx;
  Ordinal arrival = after;
  std::vector<int> ls;
  std::vector<int> rs;
  for (;;) {
    // States seen cofinally: those of the period, plus every state of the
    // inner loops collapsed inside it (their pairs may predate the period).
    for (std::size_t t = from; t < trace_.size(); ++t) {
      ls.push_back(trace_.pairs()[t].left);
      rs.push_back(trace_.pairs()[t].right);
      if (!trace_.reached_by_limit(t)) continue;
      const auto& [lspan, rspan] = trace_.spans(t);
      for (int q = lspan.first; q <= lspan.second; ++q) ls.push_back(q);
      for (int q = rspan.first; q <= rspan.second; ++q) rs.push_back(q);
    }
    const PairState closed{limit_for(left_, ls, "left"), limit_for(right_, rs, "right")};
    const Ordinal& entry = trace_.positions()[from];
    arrival = entry + sub_left(entry, arrival) * Ordinal::omega();
    ++out.collapses;
    out.pair = closed;
    if (std::find(rs.begin(), rs.end(), right_.final_state()) != rs.end())
      out.right_loop_has_final = true;
    const auto again = trace_.index_of(closed);
    if (!again) break;
    if (out.collapses > trace_.size())
      throw InvariantViolation("limit collapse does not terminate");
    from = *again;
  }
  const auto [llo, lhi] = std::minmax_element(ls.begin(), ls.end());
  const auto [rlo, rhi] = std::minmax_element(rs.begin(), rs.end());
  trace_.push(out.pair, arrival, true, {{*llo, *lhi}, {*rlo, *rhi}});
  return out;
}

RunResult run_to_divergence(const Automaton& left, const Automaton& right) {
  SyncRun run(left, right, {left.initial(), right.initial()});
  for (;;) {
    StepOutcome out = run.step();
    if (out.kind != StepOutcome::Kind::Advanced && out.kind != StepOutcome::Kind::LoopClosed)
      return {run.trace(), out, run.steps()};
  }
}

}  // namespace tlyndon
