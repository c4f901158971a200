#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwp/alphabet.hpp"
#include "gwp/xgraph.hpp"

namespace gwp {

using StateId = std::uint32_t;

/// Finite automaton over Y built from a Stallings core: live states are the
/// core vertices (state 0 is the base coset K, the start and only accepting
/// state) and every missing core edge leads to the absorbing failure state.
class CosetFsa {
 public:
  explicit CosetFsa(const XGraph& core);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t live_count() const noexcept { return live_; }
  StateId start() const noexcept { return 0; }
  StateId failure() const noexcept { return static_cast<StateId>(live_); }
  bool is_live(StateId s) const noexcept { return s < live_; }

  StateId next(StateId from, Symbol y) const {
    return table_[static_cast<std::size_t>(from) * alphabet_.size() + index_of(y)];
  }
  bool accepts(WordView v) const;

 private:
  Alphabet alphabet_;
  std::size_t live_ = 0;
  std::vector<StateId> table_;
};

/// Stack symbol: the bottom marker, a letter of Y, or a letter tagged with
/// the live state the automaton left when it entered the failure state.
struct StackSymbol {
  enum class Kind : std::uint8_t { bottom, letter, marked };
  Kind kind = Kind::bottom;
  Symbol letter{};
  StateId from = 0;

  static StackSymbol bottom() { return {}; }
  static StackSymbol plain(Symbol y) { return {Kind::letter, y, 0}; }
  static StackSymbol tagged(Symbol y, StateId s) { return {Kind::marked, y, s}; }

  friend bool operator==(const StackSymbol&, const StackSymbol&) = default;
};

struct PdaConfig {
  StateId state = 0;
  std::vector<StackSymbol> stack{StackSymbol::bottom()};  // bottom first

  friend bool operator==(const PdaConfig&, const PdaConfig&) = default;
};

/// The seven transition rows.
enum class PdaRow : std::uint8_t {
  live_pop = 1,         // sigma_i, live move, top y^-1: pop
  live_push = 2,        // sigma_i, live move, other top: push y
  leave = 3,            // sigma_i, dead move: push (y, sigma_i)
  marker_return = 4,    // failure state, top (y^-1, sigma_i): pop, back to sigma_i
  marker_push = 5,      // failure state, top (y', sigma_i): push y
  failure_pop = 6,      // failure state, top y^-1: pop
  failure_push = 7,     // failure state, other top: push y
};

struct PdaStep {
  PdaRow row;
  StateId from;
  StateId to;
  Symbol input;
  std::optional<StackSymbol> popped;
  std::optional<StackSymbol> pushed;
};

/// Deterministic pushdown automaton for membership in K <= F.  The stack
/// holds the free reduction of the prefix read so far; a tagged letter marks
/// where the prefix left the finite automaton so it can return.
class GwpPda {
 public:
  explicit GwpPda(CosetFsa fsa) : fsa_(std::move(fsa)) {}
  explicit GwpPda(const XGraph& core) : fsa_(core) {}

  const CosetFsa& fsa() const noexcept { return fsa_; }
  const Alphabet& alphabet() const noexcept { return fsa_.alphabet(); }

  PdaConfig start() const { return PdaConfig{fsa_.start(), {StackSymbol::bottom()}}; }
  /// Acceptance by final state; the stack is not inspected.
  bool accepting(const PdaConfig& c) const noexcept { return c.state == fsa_.start(); }

  /// Applies one transition in place.  Throws InvariantError if a
  /// configuration arises that the construction rules out (a tagged symbol
  /// on top in a live state, or top y^-1 on a dead move).
  PdaStep step(PdaConfig& config, Symbol y) const;

 private:
  CosetFsa fsa_;
};

struct PdaRun {
  bool accepted = false;
  PdaConfig final;
  std::size_t steps = 0;
};

PdaConfig pda_step(const GwpPda& pda, PdaConfig config, Symbol y);
/// Runs from the start configuration; `trace` receives one record per letter.
PdaRun pda_run(const GwpPda& pda, WordView v, std::vector<PdaStep>* trace = nullptr);

std::string format_stack_symbol(const Alphabet& alphabet, const StackSymbol& s);
std::string format_state(const CosetFsa& fsa, StateId s);
std::string format_config(const GwpPda& pda, const PdaConfig& c);

}  // namespace gwp
