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

#include "tlyndon/factorizer.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "tlyndon/duplication.hpp"
#include "tlyndon/errors.hpp"
#include "tlyndon/oracles.hpp"

namespace tlyndon {

std::string_view case_name(StepCase c) {
  switch (c) {
    case StepCase::C1a: return "1a";
    case StepCase::C1b: return "1b";
    case StepCase::C1c: return "1c";
    case StepCase::C2a: return "2a";
    case StepCase::C2b: return "2b";
    case StepCase::C3: return "3";
  }
  return "?";
}

namespace {

class Engine {
 public:
  Engine(StateFactorization& out, const FactorizerOptions& opt)
      : out_(out),
        opt_(opt),
        alpha_(*opt.alphabet),
        a_(out.automaton),
        n_(a_.n()) {
    if (opt_.debug_level > 0) pos_ = first_visit_positions(a_);
  }

  void run() {
    const std::size_t n = static_cast<std::size_t>(n_);
    const std::size_t bound = n * n * n;
    qm_.insert(0);
    restart(0, a_.successor(0)->target);
    while (i_ != n_) {
      if (out_.steps == bound)
        throw InvariantViolation("step bound n^3 = " + std::to_string(bound) + " exceeded");
      ++out_.steps;
      step();
    }
    out_.q_main.assign(qm_.begin(), qm_.end());
    out_.q_secondary.assign(qs_.begin(), qs_.end());
  }

 private:
  void restart(int i, int j) {
    if (in_loop(a_, i)) throw InvariantViolation("state i = " + std::to_string(i) + " is in a loop");
    i_ = i;
    j_ = j;
    run_.reset();
    sharp_ = std::make_unique<Automaton>(sharp_automaton(a_, i_, j_));
    run_ = std::make_unique<SyncRun>(a_, *sharp_, PairState{j_, i_});
    if (opt_.debug_level >= 2 && !is_prime_rational(candidate(), alpha_))
      throw InvariantViolation("candidate " + format_expr(candidate()) + " is not prime");
  }

  // _ix_j as a factor of the duplicated expression.
  RatExpr candidate() const { return factor(out_.duplicated, pos_at(i_), pos_at(j_)); }
  const Ordinal& pos_at(int q) const { return pos_.at(static_cast<std::size_t>(q)); }

  void step() {
    const PairState lead = run_->leading();
    const StepOutcome o = run_->step();
    StepCase c;
    switch (o.kind) {
      case StepOutcome::Kind::Advanced:
        c = StepCase::C1a;
        break;
      case StepOutcome::Kind::LoopClosed:
        if (opt_.debug_level >= 1 && o.collapses != 1)
          throw InvariantViolation("pair after a limit transition is not fresh");
        c = o.right_loop_has_final ? StepCase::C1c : StepCase::C1b;
        break;
      case StepOutcome::Kind::Diverged:
        c = o.left_label > o.right_label ? case2(lead) : case3();
        break;
      case StepOutcome::Kind::LeftEnded:
        c = case3();
        break;
      default:
        throw InvariantViolation("sharp automaton ran out of transitions");
    }
    if (opt_.debug_level >= 2 && i_ != n_ &&
        (c == StepCase::C1a || c == StepCase::C1b || c == StepCase::C1c))
      check_read_word();
    if (opt_.record_events) {
      StepEvent ev{lead, c, i_, j_, {}};
      if (opt_.record_history && i_ != n_) ev.history = run_->trace().pairs();
      out_.events.push_back(std::move(ev));
    }
  }

  // The history was reset at the last Case 2/3, so it no longer lists the
  // states read between i and j. Every state up to the largest one in H has
  // been visited since i, which is what "k.b occurs in the history" tests.
  StepCase case2(PairState lead) {
    const auto& pairs = run_->trace().pairs();
    const int t = a_.successor(lead.left)->target;
    const int m = std::max_element(pairs.begin(), pairs.end(), [](const PairState& x,
                                                                  const PairState& y) {
                    return x.left < y.left;
                  })->left;
    const bool seen = t <= m;
    const int j = seen ? m + 1 : t;
    if (j <= j_)
      throw InvariantViolation("Case 2 did not move j forward (" + std::to_string(j_) + " -> " +
                               std::to_string(j) + ")");
    restart(i_, j);
    return seen ? StepCase::C2b : StepCase::C2a;
  }

  StepCase case3() {
    std::set<int> added{j_};
    for (const auto& p : run_->trace().pairs())
      if (p.right == j_) added.insert(p.left);
    const int next = *added.rbegin();
    if (next <= i_) throw InvariantViolation("Case 3 did not move i forward");
    if (opt_.debug_level >= 1 && next != n_) {
      const RatExpr u = candidate();
      const RatExpr rest = *suffix_word(a_, next);
      if (compare(u, rest, alpha_).lex() != std::weak_ordering::greater)
        throw InvariantViolation("prime " + format_expr(u) + " is not above the remaining suffix");
    }
    qs_.insert(added.begin(), added.end());
    qs_.erase(next);
    qm_.insert(next);
    if (next == n_) {
      i_ = n_;
    } else {
      restart(next, a_.successor(next)->target);
    }
    return StepCase::C3;
  }

  // The word read since i is u^beta y with y a proper prefix of u = _ix_j.
  void check_read_word() const {
    const RatExpr u = candidate();
    const Ordinal read = u.length() + run_->position();
    const auto [beta, rho] = div_left(read, u.length());
    const RatExpr got = factor(out_.duplicated, pos_at(i_), pos_at(i_) + read);
    RatExpr want = power(u, beta);
    if (!rho.is_zero()) want = RatExpr::concat(want, prefix_to(u, rho));
    if (!word_equal(got, want, alpha_))
      throw InvariantViolation("word read from " + std::to_string(i_) +
                               " is not a power of the candidate followed by a prefix");
  }

  StateFactorization& out_;
  const FactorizerOptions& opt_;
  const Alphabet& alpha_;
  const Automaton& a_;
  const int n_;
  std::vector<Ordinal> pos_;
  int i_ = 0;
  int j_ = 0;
  std::unique_ptr<Automaton> sharp_;
  std::unique_ptr<SyncRun> run_;
  std::set<int> qm_;
  std::set<int> qs_;
};

}  // namespace

StateFactorization factorize_states(const RatExpr& e, const FactorizerOptions& options) {
  RatExpr dup = tau(e);
  Automaton a = compile(dup, *options.alphabet);
  StateFactorization out{e, dup, std::move(a), {}, {}, 0, {}};
  Engine(out, options).run();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Marker {
 public:
  Marker(const StateFactorization& s, bool ascii)
      : main_(s.q_main.begin(), s.q_main.end()),
        secondary_(s.q_secondary.begin(), s.q_secondary.end()),
        main_text_(ascii ? "||" : "‖") {}

  std::string render(const RatExpr& e, int n) {
    walk(e, false);
    mark(n);
    return std::move(out_);
  }

 private:
  bool marked(int s) const { return main_.contains(s) || secondary_.contains(s); }

  void mark(int s) {
    if (main_.contains(s)) {
      out_ += main_text_;
    } else if (secondary_.contains(s)) {
      out_ += '|';
    }
  }

  // suppress: the marker of the first token was already written by an
  // enclosing group.
  void walk(const RatExpr& e, bool suppress) {
    switch (e.kind()) {
      case RatExpr::Kind::Letter:
        if (!suppress) mark(next_);
        ++next_;
        out_ += e.symbol();
        return;
      case RatExpr::Kind::Concat: {
        bool first = true;
        for (const auto& c : e.children()) {
          walk(c, suppress && first);
          first = false;
        }
        return;
      }
      case RatExpr::Kind::Omega: {
        const int start = next_;
        const int t = start + static_cast<int>(e.body().token_count());
        if (!suppress) mark(start);
        const bool parens = !e.body().is_letter() || marked(t);
        if (parens) out_ += '(';
        walk(e.body(), true);
        mark(t);
        ++next_;
        if (parens) out_ += ')';
        out_ += "^w";
        return;
      }
    }
  }

  std::set<int> main_;
  std::set<int> secondary_;
  std::string main_text_;
  std::string out_;
  int next_ = 0;
};

}  // namespace

std::string marked_expression(const StateFactorization& s, bool ascii) {
  return Marker(s, ascii).render(s.duplicated, s.automaton.n());
}

Factorization extract_factorization(const StateFactorization& s) {
  const std::vector<Ordinal> pos = first_visit_positions(s.automaton);
  auto at = [&](int q) -> const Ordinal& { return pos.at(static_cast<std::size_t>(q)); };
  const auto& qm = s.q_main;
  if (qm.size() < 2 || qm.front() != 0 || qm.back() != s.automaton.n())
    throw InvariantViolation("main states must contain 0 and the final state");

  Factorization out;
  for (std::size_t b = 0; b + 1 < qm.size(); ++b) {
    const Ordinal& from = at(qm[b]);
    const Ordinal& to = at(qm[b + 1]);
    Ordinal cut = to;
    for (int q : s.q_secondary)
      if (q > qm[b] && q < qm[b + 1]) cut = std::min(cut, at(q));
    const Ordinal block = sub_left(from, to);
    const Ordinal prime_len = sub_left(from, cut);
    const auto [exponent, remainder] = div_left(block, prime_len);
    if (!remainder.is_zero())
      throw InvariantViolation("block of length " + block.to_string() +
                               " is not a power of its prefix of length " +
                               prime_len.to_string());
    out.push_back({factor(s.input, from, cut), exponent});
  }
  return out;
}

Factorization factorize(const RatExpr& e, const Alphabet& alphabet) {
  FactorizerOptions opt;
  opt.alphabet = &alphabet;
  return extract_factorization(factorize_states(e, opt));
}

}  // namespace tlyndon
