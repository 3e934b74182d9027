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

#include "tlyndon/automaton.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tlyndon/errors.hpp"

namespace tlyndon {

Automaton::Automaton(int n, std::vector<std::optional<Edge>> successors,
                     std::map<Interval, int> limits, Alphabet alphabet, int initial,
                     int final_state)
    : n_(n),
      succ_(std::move(successors)),
      limits_(std::move(limits)),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      final_(final_state < 0 ? n : final_state) {
  if (n_ < 0) throw std::invalid_argument("automaton needs at least one state");
  succ_.resize(static_cast<std::size_t>(n_) + 1);
  if (initial_ < 0 || initial_ > n_ || final_ > n_)
    throw std::invalid_argument("initial/final state out of range");
}

int Automaton::letter_leaving(int q) const {
  const auto& e = successor(q);
  return e ? e->label : kEndMarker;
}

std::optional<int> Automaton::limit_target(int lo, int hi) const {
  auto it = limits_.find({lo, hi});
  if (it == limits_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

struct Compiler {
  const Alphabet& alphabet;
  std::vector<std::optional<Edge>> succ;
  std::map<Automaton::Interval, int> limits;
  std::vector<char> token_letter;  // letter of each letter token, 0 for w
  int next = 0;

  void emit(const RatExpr& e) {
    switch (e.kind()) {
      case RatExpr::Kind::Letter: {
        const int t = next++;
        token_letter.push_back(e.symbol());
        succ.push_back(Edge{alphabet.rank(e.symbol()), e.symbol(), t + 1});
        return;
      }
      case RatExpr::Kind::Concat:
        for (const auto& c : e.children()) emit(c);
        return;
      case RatExpr::Kind::Omega: {
        const int start = next;
        emit(e.body());
        const int t = next++;
        const char a = token_letter[static_cast<std::size_t>(start)];
        token_letter.push_back(0);
        succ.push_back(Edge{alphabet.rank(a), a, start + 1});
        limits[{start + 1, t}] = t + 1;
        return;
      }
    }
  }
};

}  // namespace

Automaton compile(const RatExpr& e, const Alphabet& alphabet) {
  Compiler c{alphabet, {}, {}, {}};
  c.emit(e);
  for (char s : c.token_letter)
    if (s != 0 && !alphabet.contains(s))
      throw std::invalid_argument(std::string("letter '") + s + "' is not in the alphabet");
  Automaton a(c.next, std::move(c.succ), std::move(c.limits), alphabet);
  a.source_ = e;
  return a;
}

bool in_loop(const Automaton& a, int q) {
  for (const auto& [iv, target] : a.limits())
    if (iv.first <= q && q <= iv.second) return true;
  return false;
}

Automaton sub_automaton(const Automaton& a, int i, int j) {
  if (i < 0 || i >= j || j > a.n())
    throw std::invalid_argument("sub_automaton: need 0 <= i < j <= n");
  if (in_loop(a, i)) throw std::invalid_argument("sub_automaton: initial state lies in a loop");
  std::vector<std::optional<Edge>> succ(static_cast<std::size_t>(a.n()) + 1);
  for (int q = i; q < j; ++q) succ[static_cast<std::size_t>(q)] = a.successor(q);
  std::map<Automaton::Interval, int> limits;
  for (const auto& [iv, target] : a.limits())
    if (iv.first >= i && iv.second + 1 <= j) limits[iv] = target;
  Automaton out(a.n(), std::move(succ), std::move(limits), a.alphabet(), i, j);
  out.source_ = a.source_;
  return out;
}

Automaton sharp_automaton(const Automaton& a, int i, int j) {
  Automaton out = sub_automaton(a, i, j);
  const auto& first = a.successor(i);
  if (!first) throw std::invalid_argument("sharp_automaton: no letter leaves i");
  out.succ_[static_cast<std::size_t>(j)] = Edge{first->label, first->symbol, i + 1};
  out.limits_[{i + 1, j}] = j;
  out.sharp_ = true;
  return out;
}

// ---------------------------------------------------------------------------
// Readback over the token numbering of the source expression.

namespace {

const RatExpr& source_of(const Automaton& a) {
  if (!a.source()) throw std::invalid_argument("automaton has no source expression");
  return *a.source();
}

// Suffix of e read from state q, with e occupying states [base, base+tokens).
RatExpr suffix_after(const RatExpr& e, int base, int q) {
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      return e;
    case RatExpr::Kind::Concat: {
      const auto& ch = e.children();
      int b = base;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        const int end = b + static_cast<int>(ch[i].token_count());
        if (q < end) {
          std::vector<RatExpr> parts{suffix_after(ch[i], b, q)};
          parts.insert(parts.end(), ch.begin() + static_cast<long>(i) + 1, ch.end());
          return RatExpr::concat(std::move(parts));
        }
        b = end;
      }
      break;
    }
    case RatExpr::Kind::Omega: {
      const int t = base + static_cast<int>(e.body().token_count());
      if (q == t) return e;
      if (q == base) return e;  // body then e is e again
      return RatExpr::concat(suffix_after(e.body(), base, q), e);
    }
  }
  throw InvariantViolation("suffix_after: state outside expression");
}

// Word read from the start of e up to the first visit of s, base < s <= end.
RatExpr prefix_before(const RatExpr& e, int base, int s) {
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      return e;
    case RatExpr::Kind::Concat: {
      std::vector<RatExpr> parts;
      int b = base;
      for (const auto& c : e.children()) {
        const int end = b + static_cast<int>(c.token_count());
        if (end <= s) {
          parts.push_back(c);
          if (end == s) break;
        } else {
          parts.push_back(prefix_before(c, b, s));
          break;
        }
        b = end;
      }
      return RatExpr::concat(std::move(parts));
    }
    case RatExpr::Kind::Omega: {
      const int t = base + static_cast<int>(e.body().token_count());
      if (s == t + 1) return e;
      if (s == t) return e.body();
      return prefix_before(e.body(), base, s);
    }
  }
  throw InvariantViolation("prefix_before: state outside expression");
}

}  // namespace

std::optional<RatExpr> suffix_word(const Automaton& a, int q) {
  const RatExpr& e = source_of(a);
  if (q < 0 || q > a.n()) throw std::out_of_range("suffix_word: state out of range");
  if (q == a.n()) return std::nullopt;
  return suffix_after(e, 0, q);
}

FirstVisit first_visit_prefix(const Automaton& a, int s) {
  const RatExpr& e = source_of(a);
  if (s < 1 || s > a.n()) throw std::out_of_range("first_visit_prefix: state out of range");
  RatExpr p = prefix_before(e, 0, s);
  return {p.length(), std::move(p)};
}

std::vector<Ordinal> first_visit_positions(const Automaton& a) {
  std::vector<Ordinal> out(static_cast<std::size_t>(a.n()) + 1);
  for (int s = 1; s <= a.n(); ++s) out[static_cast<std::size_t>(s)] = first_visit_prefix(a, s).position;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate(const Automaton& a) {
  std::vector<std::string> bad;
  auto report = [&](std::string msg) { bad.push_back(std::move(msg)); };
  const int n = a.n();

  std::vector<int> entering_label(static_cast<std::size_t>(n) + 1, kEndMarker - 1);
  std::vector<int> by_succ(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> by_limit(static_cast<std::size_t>(n) + 1, 0);

  for (int q = 0; q <= n; ++q) {
    const auto& e = a.successor(q);
    if (!e) {
      if (q >= a.initial() && q < a.final_state())
        report("state " + std::to_string(q) + " has no successor");
      continue;
    }
    if (q == a.final_state()) report("final state " + std::to_string(q) + " has a successor");
    if (e->target < 0 || e->target > n) {
      report("successor of " + std::to_string(q) + " leaves the state range");
      continue;
    }
    const auto t = static_cast<std::size_t>(e->target);
    ++by_succ[t];
    if (entering_label[t] == kEndMarker - 1) {
      entering_label[t] = e->label;
    } else if (entering_label[t] != e->label) {
      report("transitions entering " + std::to_string(e->target) + " carry different labels");
    }
    if (e->target > q + 1) {
      report("successor " + std::to_string(q) + "->" + std::to_string(e->target) +
             " skips states");
    } else if (e->target <= q && !a.limit_target(e->target, q)) {
      report("backwards transition " + std::to_string(q) + "->" + std::to_string(e->target) +
             " without a limit on [" + std::to_string(e->target) + "," + std::to_string(q) + "]");
    }
  }

  for (const auto& [iv, target] : a.limits()) {
    const auto [lo, hi] = iv;
    const std::string name = "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
    if (lo > hi || lo < 0 || hi > n || target < 0 || target > n) {
      report("limit " + name + " out of range");
      continue;
    }
    if (target != hi + 1) report("limit " + name + " does not lead to " + std::to_string(hi + 1));
    const auto& back = a.successor(hi);
    if (!back || back->target != lo) report("limit " + name + " has no backwards transition");
    ++by_limit[static_cast<std::size_t>(target)];
  }

  for (auto it = a.limits().begin(); it != a.limits().end(); ++it) {
    for (auto jt = std::next(it); jt != a.limits().end(); ++jt) {
      const auto [l1, h1] = it->first;
      const auto [l2, h2] = jt->first;
      const bool disjoint = h1 < l2 || h2 < l1;
      const bool nested = (l1 <= l2 && h2 <= h1) || (l2 <= l1 && h1 <= h2);
      if (!disjoint && !nested)
        report("limits {" + std::to_string(l1) + ".." + std::to_string(h1) + "} and {" +
               std::to_string(l2) + ".." + std::to_string(h2) + "} are not well-nested");
    }
  }

  for (int q = 0; q <= n; ++q) {
    const auto s = static_cast<std::size_t>(q);
    if (q == a.initial()) {
      if (by_succ[s] + by_limit[s] > 0) report("initial state is reached by a transition");
      continue;
    }
    if (by_succ[s] > 0 && by_limit[s] > 0)
      report("state " + std::to_string(q) + " is reached by both transition kinds");
    if (q > a.initial() && q <= a.final_state() && by_succ[s] + by_limit[s] == 0)
      report("state " + std::to_string(q) + " is unreachable");
  }
  return bad;
}

// ---------------------------------------------------------------------------

namespace {

void numbered_into(const RatExpr& e, int& next, std::string& out) {
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      out += std::to_string(next++);
      out += e.symbol();
      return;
    case RatExpr::Kind::Concat:
      for (const auto& c : e.children()) numbered_into(c, next, out);
      return;
    case RatExpr::Kind::Omega:
      if (!e.body().is_letter()) out += '(';
      numbered_into(e.body(), next, out);
      if (!e.body().is_letter()) out += ')';
      out += std::to_string(next++);
      out += 'w';
      return;
  }
}

}  // namespace

std::string numbered_word(const RatExpr& e) {
  std::string out;
  int next = 0;
  numbered_into(e, next, out);
  out += std::to_string(next);
  return out;
}

std::string describe(const Automaton& a) {
  std::ostringstream os;
  os << "states: " << a.state_count() << " (initial " << a.initial() << ", final "
     << a.final_state() << ")\n";
  if (a.source()) os << "numbered: " << numbered_word(*a.source()) << '\n';
  for (int q = 0; q <= a.n(); ++q)
    if (const auto& e = a.successor(q))
      os << "succ " << q << " -" << e->symbol << "-> " << e->target << '\n';
  for (const auto& [iv, target] : a.limits())
    os << "limit {" << iv.first << ".." << iv.second << "} -> " << target << '\n';
  return os.str();
}

std::string to_dot(const Automaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  os << "  " << a.final_state() << " [shape=doublecircle];\n";
  os << "  start [shape=point];\n  start -> " << a.initial() << ";\n";
  for (int q = 0; q <= a.n(); ++q)
    if (const auto& e = a.successor(q))
      os << "  " << q << " -> " << e->target << " [label=\"" << e->symbol << "\"];\n";
  for (const auto& [iv, target] : a.limits())
    os << "  " << iv.second << " -> " << target << " [style=dashed, label=\"{" << iv.first
       << ".." << iv.second << "}\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tlyndon
