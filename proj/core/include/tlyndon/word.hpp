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

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlyndon/ordinal.hpp"

namespace tlyndon {

/// Ordered set of single-character letters. Comparison of words uses the
/// position of a letter in this sequence, not its character code.
class Alphabet {
 public:
  /// Lowercase latin letters in natural order.
  Alphabet();
  /// Throws std::invalid_argument on an empty or repeated letter list.
  explicit Alphabet(std::string_view letters);

  static const Alphabet& standard();

  bool contains(char c) const noexcept { return rank(c) >= 0; }
  int rank(char c) const noexcept { return rank_[static_cast<unsigned char>(c)]; }
  char symbol(int rank) const { return letters_.at(static_cast<std::size_t>(rank)); }
  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

 private:
  std::string letters_;
  std::array<int, 256> rank_{};
};

/// Rational expression over letters, concatenation and w-power. Immutable;
/// copies share structure. Concatenations are kept flat (no Concat child of
/// a Concat) and always have at least two parts, so an expression never
/// denotes the empty word.
class RatExpr {
 public:
  enum class Kind { Letter, Concat, Omega };

  static RatExpr letter(char c);
  /// Flattens nested concatenations. A single part is returned unchanged.
  /// Throws std::invalid_argument on an empty list.
  static RatExpr concat(std::vector<RatExpr> parts);
  static RatExpr concat(const RatExpr& a, const RatExpr& b) { return concat({a, b}); }
  static RatExpr omega(const RatExpr& body);

  Kind kind() const noexcept { return node_->kind; }
  bool is_letter() const noexcept { return kind() == Kind::Letter; }
  char symbol() const noexcept { return node_->symbol; }
  /// Concat parts, or the single body of an Omega node.
  const std::vector<RatExpr>& children() const noexcept { return node_->children; }
  const RatExpr& body() const { return node_->children.front(); }

  /// Ordinal length of the denoted word.
  const Ordinal& length() const noexcept { return node_->length; }
  /// Number of letter and w tokens.
  std::size_t token_count() const noexcept { return node_->tokens; }
  /// Maximum nesting of w.
  std::size_t omega_depth() const noexcept { return node_->depth; }

  /// Same tree, letter for letter. Word equality is word_equal().
  bool same_tree(const RatExpr& other) const;

 private:
  struct Node {
    Kind kind;
    char symbol = 0;
    std::vector<RatExpr> children;
    Ordinal length;
    std::size_t tokens = 0;
    std::size_t depth = 0;
  };

  explicit RatExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Surface grammar:
///   expr := term+      term := atom ["^w"]      atom := letter | "(" expr ")"
/// Whitespace is ignored and "^ω" is accepted for "^w". Throws ParseError.
RatExpr parse_expr(std::string_view text, const Alphabet& alphabet = Alphabet::standard());

/// Inverse of parse_expr up to flattening.
std::string format_expr(const RatExpr& e);

inline const Ordinal& expr_length(const RatExpr& e) { return e.length(); }

/// u^alpha for alpha >= 1: each w^k*c term of alpha becomes c copies of u
/// under k nested w-powers. Throws std::invalid_argument for alpha = 0 and
/// std::length_error when a finite coefficient is too large to unroll.
RatExpr power(const RatExpr& e, const Ordinal& alpha);

/// Letter at position pos < |e|. Throws std::out_of_range.
char letter_at(const RatExpr& e, const Ordinal& pos);

/// Prefix of length len, 0 < len <= |e|. Throws std::out_of_range.
RatExpr prefix_to(const RatExpr& e, const Ordinal& len);
/// Suffix starting at pos, 0 <= pos < |e|. Throws std::out_of_range.
RatExpr suffix_from(const RatExpr& e, const Ordinal& pos);
/// Factor e[from, to) with from < to <= |e|.
RatExpr factor(const RatExpr& e, const Ordinal& from, const Ordinal& to);

struct CompareOutcome {
  enum class Kind {
    StrictlyLess,         // x = zaw, y = zbw' with a < b
    StrictlyGreater,      // same with a > b
    Equal,
    LeftIsProperPrefix,
    RightIsProperPrefix,
  };

  Kind kind;
  /// Position of the first differing letter, or the length of the shorter
  /// word for the prefix variants and for Equal.
  Ordinal position;
  char left_letter = 0;
  char right_letter = 0;

  /// Lexicographic order (prefix counts as smaller).
  std::weak_ordering lex() const noexcept;
};

/// Lexicographic comparison by a synchronized run of the two compiled
/// automata.
CompareOutcome compare(const RatExpr& x, const RatExpr& y,
                       const Alphabet& alphabet = Alphabet::standard());

bool word_equal(const RatExpr& x, const RatExpr& y,
                const Alphabet& alphabet = Alphabet::standard());

/// x <=lex y.
bool lex_le(const RatExpr& x, const RatExpr& y, const Alphabet& alphabet = Alphabet::standard());
/// x <lex y.
bool lex_lt(const RatExpr& x, const RatExpr& y, const Alphabet& alphabet = Alphabet::standard());

}  // namespace tlyndon
