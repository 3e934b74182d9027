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

#include "tlyndon/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tlyndon/automaton.hpp"
#include "tlyndon/errors.hpp"
#include "tlyndon/sync_runner.hpp"

namespace tlyndon {

namespace {
// Upper bound on the number of copies unrolled for a finite coefficient.
constexpr std::size_t kMaxUnroll = std::size_t{1} << 16;
}  // namespace

Alphabet::Alphabet() : Alphabet("abcdefghijklmnopqrstuvwxyz") {}

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must not be empty");
  rank_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto c = static_cast<unsigned char>(letters_[i]);
    if (rank_[c] >= 0) throw std::invalid_argument("alphabet letters must be distinct");
    if (std::isspace(c) || c == '(' || c == ')' || c == '^')
      throw std::invalid_argument("alphabet letter clashes with expression syntax");
    rank_[c] = static_cast<int>(i);
  }
}

const Alphabet& Alphabet::standard() {
  static const Alphabet kStandard;
  return kStandard;
}

RatExpr RatExpr::letter(char c) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Letter;
  node->symbol = c;
  node->length = Ordinal(1);
  node->tokens = 1;
  return RatExpr(std::move(node));
}

RatExpr RatExpr::concat(std::vector<RatExpr> parts) {
  if (parts.empty()) throw std::invalid_argument("empty concatenation");
  if (parts.size() == 1) return std::move(parts.front());
  auto node = std::make_shared<Node>();
  node->kind = Kind::Concat;
  for (auto& p : parts) {
    if (p.kind() == Kind::Concat) {
      node->children.insert(node->children.end(), p.children().begin(), p.children().end());
    } else {
      node->children.push_back(std::move(p));
    }
  }
  for (const auto& c : node->children) {
    node->length += c.length();
    node->tokens += c.token_count();
    node->depth = std::max(node->depth, c.omega_depth());
  }
  return RatExpr(std::move(node));
}

RatExpr RatExpr::omega(const RatExpr& body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Omega;
  node->children.push_back(body);
  node->length = body.length() * Ordinal::omega();
  node->tokens = body.token_count() + 1;
  node->depth = body.omega_depth() + 1;
  return RatExpr(std::move(node));
}

bool RatExpr::same_tree(const RatExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || token_count() != other.token_count()) return false;
  if (kind() == Kind::Letter) return symbol() == other.symbol();
  if (children().size() != other.children().size()) return false;
  for (std::size_t i = 0; i < children().size(); ++i)
    if (!children()[i].same_tree(other.children()[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  RatExpr parse() {
    RatExpr e = parse_expr();
    skip_ws();
    if (!at_end()) {
      if (peek() == ')') fail("unbalanced ')'");
      fail("unexpected character");
    }
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  RatExpr parse_expr() {
    std::vector<RatExpr> terms;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == ')') break;
      terms.push_back(parse_term());
    }
    if (terms.empty()) fail("expected a letter or '('");
    return RatExpr::concat(std::move(terms));
  }

  RatExpr parse_term() {
    RatExpr atom = parse_atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == 'w') {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "\xCF\x89") {
        pos_ += 2;
      } else {
        fail("expected 'w' after '^'");
      }
      return RatExpr::omega(atom);
    }
    return atom;
  }

  RatExpr parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatExpr inner = parse_expr();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '^') fail("'^' without an operand");
    if (!alphabet_.contains(c)) fail(std::string("letter '") + c + "' is not in the alphabet");
    ++pos_;
    return RatExpr::letter(c);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

void format_into(const RatExpr& e, std::string& out) {
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      out += e.symbol();
      return;
    case RatExpr::Kind::Concat:
      for (const auto& c : e.children()) format_into(c, out);
      return;
    case RatExpr::Kind::Omega:
      if (e.body().is_letter()) {
        out += e.body().symbol();
      } else {
        out += '(';
        format_into(e.body(), out);
        out += ')';
      }
      out += "^w";
      return;
  }
}

}  // namespace

RatExpr parse_expr(std::string_view text, const Alphabet& alphabet) {
  return ExprParser(text, alphabet).parse();
}

std::string format_expr(const RatExpr& e) {
  std::string out;
  format_into(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Powers and slicing

RatExpr power(const RatExpr& e, const Ordinal& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("power with exponent 0 is the empty word");
  std::vector<RatExpr> parts;
  for (const auto& t : alpha.terms()) {
    RatExpr base = e;
    for (std::uint32_t k = 0; k < t.exponent; ++k) base = RatExpr::omega(base);
    if (t.coefficient > kMaxUnroll)
      throw std::length_error("finite exponent too large to unroll: " + t.coefficient.str());
    const auto copies = static_cast<std::size_t>(t.coefficient);
    for (std::size_t c = 0; c < copies; ++c) parts.push_back(base);
  }
  return RatExpr::concat(std::move(parts));
}

char letter_at(const RatExpr& e, const Ordinal& pos) {
  if (pos >= e.length()) throw std::out_of_range("letter_at: position " + pos.to_string() +
                                                 " beyond length " + e.length().to_string());
  const RatExpr* node = &e;
  Ordinal at = pos;
  for (;;) {
    switch (node->kind()) {
      case RatExpr::Kind::Letter:
        return node->symbol();
      case RatExpr::Kind::Concat:
        for (const auto& c : node->children()) {
          if (at < c.length()) {
            node = &c;
            break;
          }
          at = sub_left(c.length(), at);
        }
        break;
      case RatExpr::Kind::Omega:
        at = div_left(at, node->body().length()).remainder;
        node = &node->body();
        break;
    }
  }
}

namespace {

RatExpr prefix_impl(const RatExpr& e, const Ordinal& len) {
  if (len == e.length()) return e;
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      break;
    case RatExpr::Kind::Concat: {
      std::vector<RatExpr> parts;
      Ordinal rem = len;
      for (const auto& c : e.children()) {
        if (rem >= c.length()) {
          parts.push_back(c);
          rem = sub_left(c.length(), rem);
          if (rem.is_zero()) break;
        } else {
          parts.push_back(prefix_impl(c, rem));
          break;
        }
      }
      return RatExpr::concat(std::move(parts));
    }
    case RatExpr::Kind::Omega: {
      const auto [copies, rest] = div_left(len, e.body().length());
      std::vector<RatExpr> parts;
      if (!copies.is_zero()) parts.push_back(power(e.body(), copies));
      if (!rest.is_zero()) parts.push_back(prefix_impl(e.body(), rest));
      return RatExpr::concat(std::move(parts));
    }
  }
  throw InvariantViolation("prefix_impl: inconsistent length");
}

RatExpr suffix_impl(const RatExpr& e, const Ordinal& pos) {
  if (pos.is_zero()) return e;
  switch (e.kind()) {
    case RatExpr::Kind::Letter:
      break;
    case RatExpr::Kind::Concat: {
      std::vector<RatExpr> parts;
      Ordinal rem = pos;
      const auto& ch = e.children();
      std::size_t i = 0;
      while (rem >= ch[i].length()) rem = sub_left(ch[i++].length(), rem);
      parts.push_back(suffix_impl(ch[i], rem));
      parts.insert(parts.end(), ch.begin() + static_cast<long>(i) + 1, ch.end());
      return RatExpr::concat(std::move(parts));
    }
    case RatExpr::Kind::Omega: {
      // pos < |u|*w forces a finite quotient, and u^w minus finitely many
      // leading copies is u^w again.
      const Ordinal rest = div_left(pos, e.body().length()).remainder;
      if (rest.is_zero()) return e;
      return RatExpr::concat(suffix_impl(e.body(), rest), e);
    }
  }
  throw InvariantViolation("suffix_impl: inconsistent length");
}

}  // namespace

RatExpr prefix_to(const RatExpr& e, const Ordinal& len) {
  if (len.is_zero() || len > e.length())
    throw std::out_of_range("prefix_to: length " + len.to_string() + " outside (0, " +
                            e.length().to_string() + "]");
  return prefix_impl(e, len);
}

RatExpr suffix_from(const RatExpr& e, const Ordinal& pos) {
  if (pos >= e.length())
    throw std::out_of_range("suffix_from: position " + pos.to_string() + " outside [0, " +
                            e.length().to_string() + ")");
  return suffix_impl(e, pos);
}

RatExpr factor(const RatExpr& e, const Ordinal& from, const Ordinal& to) {
  if (from >= to) throw std::out_of_range("factor: empty or reversed range");
  return suffix_from(prefix_to(e, to), from);
}

// ---------------------------------------------------------------------------
// Comparison

std::weak_ordering CompareOutcome::lex() const noexcept {
  switch (kind) {
    case Kind::StrictlyLess:
    case Kind::LeftIsProperPrefix:
      return std::weak_ordering::less;
    case Kind::StrictlyGreater:
    case Kind::RightIsProperPrefix:
      return std::weak_ordering::greater;
    case Kind::Equal:
      break;
  }
  return std::weak_ordering::equivalent;
}

CompareOutcome compare(const RatExpr& x, const RatExpr& y, const Alphabet& alphabet) {
  const Automaton ax = compile(x, alphabet);
  const Automaton ay = compile(y, alphabet);
  SyncRun run(ax, ay, {ax.initial(), ay.initial()});
  for (;;) {
    const StepOutcome out = run.step();
    using K = StepOutcome::Kind;
    switch (out.kind) {
      case K::Advanced:
      case K::LoopClosed:
        continue;
      case K::Diverged: {
        CompareOutcome r{out.left_label < out.right_label ? CompareOutcome::Kind::StrictlyLess
                                                          : CompareOutcome::Kind::StrictlyGreater,
                         run.position(), alphabet.symbol(out.left_label),
                         alphabet.symbol(out.right_label)};
        return r;
      }
      case K::LeftEnded:
        return {CompareOutcome::Kind::LeftIsProperPrefix, run.position()};
      case K::RightEnded:
        return {CompareOutcome::Kind::RightIsProperPrefix, run.position()};
      case K::BothEnded:
        return {CompareOutcome::Kind::Equal, run.position()};
    }
  }
}

bool word_equal(const RatExpr& x, const RatExpr& y, const Alphabet& alphabet) {
  if (x.length() != y.length()) return false;
  if (x.same_tree(y)) return true;
  return compare(x, y, alphabet).kind == CompareOutcome::Kind::Equal;
}

bool lex_le(const RatExpr& x, const RatExpr& y, const Alphabet& alphabet) {
  return compare(x, y, alphabet).lex() != std::weak_ordering::greater;
}

bool lex_lt(const RatExpr& x, const RatExpr& y, const Alphabet& alphabet) {
  return compare(x, y, alphabet).lex() == std::weak_ordering::less;
}

}  // namespace tlyndon
