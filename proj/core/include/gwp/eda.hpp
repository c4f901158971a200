#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "gwp/alphabet.hpp"

namespace gwp {

/// A strictly length-reducing rule.  Anchored rules stand for `H lhs -> H rhs`
/// and only match a prefix of the tape.
struct Rule {
  Word lhs;
  Word rhs;
  bool anchored = false;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Tape and work counters of one reduction run.  The H marker is implicit
/// in front of the tape.
struct ReducerState {
  Word tape;
  std::size_t letters_consumed = 0;
  std::size_t applications = 0;
  std::size_t max_cascade = 0;

  friend bool operator==(const ReducerState&, const ReducerState&) = default;
};

/// Extended Dehn algorithm: a finite set of plain and anchored length
/// reducing rules applied in a fixed order.  Among the left hand sides
/// occurring in H.w, the one ending closest to the start wins; ties go to
/// the longest left hand side, then to the anchored rule.
class Eda {
 public:
  Eda() = default;
  /// Throws ConstructionError for non-reducing rules, symbols outside the
  /// alphabet, or two rules with the same (lhs, anchored).
  Eda(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Rule> rules() const noexcept { return rules_; }
  std::size_t max_lhs_length() const noexcept { return max_lhs_; }

  /// A copy with `extra` appended.
  Eda with_rules(std::span<const Rule> extra) const;
  /// A copy without the rule whose (lhs, anchored) matches.
  Eda without_rule(WordView lhs, bool anchored) const;

  /// Appends one letter to a reduced tape and reduces.  Letters produced by
  /// a right hand side are fed back one at a time, so every match found
  /// ends at the tape end and is the earliest-ending one.
  void feed(ReducerState& state, Symbol letter) const;
  ReducerState reduce_stream(ReducerState state, Symbol letter) const {
    feed(state, letter);
    return state;
  }
  ReducerState reduce_stream_word(WordView w) const;

  /// Reduces H.w by repeatedly rewriting the globally earliest-ending
  /// occurrence on the whole word, without the incremental trick.  Work is
  /// charged to the input letter at which the rewritten occurrence ends.
  ReducerState reduce_batch(WordView w) const;

  /// True iff no plain lhs occurs in w and no anchored lhs is a prefix.
  bool is_reduced(WordView w) const;
  /// True iff no plain lhs occurs in w.
  bool is_plain_reduced(WordView w) const;
  /// Index of the rule applicable at the end of w[0, end), if any.
  std::optional<std::size_t> match_ending_at(WordView w, std::size_t end,
                                             bool plain_only = false) const;

 private:
  struct Node {
    std::int32_t plain = -1;
    std::int32_t anchored = -1;
  };
  std::int32_t child(std::size_t node, Symbol s) const {
    return children_[node * alphabet_.size() + index_of(s)];
  }
  void build_index();

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::size_t max_lhs_ = 0;
  // Trie over reversed left hand sides.
  std::vector<Node> nodes_;
  std::vector<std::int32_t> children_;
};

/// Rule file: one rule per line, `lhs -> rhs`; anchored rules start with the
/// token `H`.  The right hand side may be empty.
Eda read_rules(std::istream& in, const Alphabet& alphabet);
void write_rules(std::ostream& out, const Eda& eda);
std::string format_rule(const Alphabet& alphabet, const Rule& rule);

}  // namespace gwp
