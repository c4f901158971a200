#include "gwp/pda.hpp"

#include "gwp/error.hpp"

namespace gwp {

CosetFsa::CosetFsa(const XGraph& core)
    : alphabet_(core.alphabet()), live_(core.vertex_count()) {
  if (core.base() != 0)
    throw ConfigError("coset automaton expects the core base to be vertex 0");
  const std::size_t width = alphabet_.size();
  table_.assign((live_ + 1) * width, failure());
  for (Vertex v = 0; v < live_; ++v)
    for (std::size_t s = 0; s < width; ++s)
      if (auto t = core.target(v, symbol_at(s))) table_[v * width + s] = *t;
}

bool CosetFsa::accepts(WordView v) const {
  StateId s = start();
  for (Symbol y : v) s = next(s, y);
  return s == start();
}

PdaStep GwpPda::step(PdaConfig& c, Symbol y) const {
  if (!alphabet().contains(y)) throw AlphabetError("letter outside the pda alphabet");
  const Symbol inv = alphabet().inverse(y);
  auto& stack = c.stack;
  if (stack.empty()) throw InvariantError("pda stack lost its bottom marker");
  const StackSymbol top = stack.back();
  PdaStep rec{PdaRow::live_push, c.state, c.state, y, std::nullopt, std::nullopt};

  auto push = [&](StackSymbol s) {
    stack.push_back(s);
    rec.pushed = s;
  };
  auto pop = [&] {
    rec.popped = stack.back();
    stack.pop_back();
  };

  if (fsa_.is_live(c.state)) {
    if (top.kind == StackSymbol::Kind::marked)
      throw InvariantError("tagged stack symbol on top in a live state");
    const StateId to = fsa_.next(c.state, y);
    const bool top_cancels = top.kind == StackSymbol::Kind::letter && top.letter == inv;
    if (fsa_.is_live(to)) {
      if (top_cancels) {
        rec.row = PdaRow::live_pop;
        pop();
      } else {
        rec.row = PdaRow::live_push;
        push(StackSymbol::plain(y));
      }
    } else {
      if (top_cancels)
        throw InvariantError("dead move on y with y^-1 on top; the coset automaton is not reversible");
      rec.row = PdaRow::leave;
      push(StackSymbol::tagged(y, c.state));
    }
    c.state = to;
  } else {
    switch (top.kind) {
      case StackSymbol::Kind::marked:
        if (top.letter == inv) {
          rec.row = PdaRow::marker_return;
          pop();
          c.state = top.from;
        } else {
          rec.row = PdaRow::marker_push;
          push(StackSymbol::plain(y));
        }
        break;
      case StackSymbol::Kind::letter:
        if (top.letter == inv) {
          rec.row = PdaRow::failure_pop;
          pop();
        } else {
          rec.row = PdaRow::failure_push;
          push(StackSymbol::plain(y));
        }
        break;
      case StackSymbol::Kind::bottom:
        rec.row = PdaRow::failure_push;
        push(StackSymbol::plain(y));
        break;
    }
  }
  rec.to = c.state;
  return rec;
}

PdaConfig pda_step(const GwpPda& pda, PdaConfig config, Symbol y) {
  pda.step(config, y);
  return config;
}

PdaRun pda_run(const GwpPda& pda, WordView v, std::vector<PdaStep>* trace) {
  PdaRun run{false, pda.start(), 0};
  for (Symbol y : v) {
    PdaStep rec = pda.step(run.final, y);
    ++run.steps;
    if (trace) trace->push_back(rec);
  }
  run.accepted = pda.accepting(run.final);
  return run;
}

std::string format_stack_symbol(const Alphabet& alphabet, const StackSymbol& s) {
  switch (s.kind) {
    case StackSymbol::Kind::bottom:
      return "$";
    case StackSymbol::Kind::letter:
      return alphabet.name(s.letter);
    case StackSymbol::Kind::marked:
      return "(" + alphabet.name(s.letter) + ",s" + std::to_string(s.from + 1) + ")";
  }
  return "?";
}

std::string format_state(const CosetFsa& fsa, StateId s) {
  return fsa.is_live(s) ? "s" + std::to_string(s + 1) : std::string("fail");
}

std::string format_config(const GwpPda& pda, const PdaConfig& c) {
  std::string out = format_state(pda.fsa(), c.state) + " [";
  for (std::size_t i = 0; i < c.stack.size(); ++i) {
    if (i) out += ' ';
    out += format_stack_symbol(pda.alphabet(), c.stack[i]);
  }
  return out + "]";
}

}  // namespace gwp
