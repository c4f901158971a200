#include "gwp/eda.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "gwp/error.hpp"

namespace gwp {

Eda::Eda(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  std::set<std::pair<Word, bool>> seen;
  for (const Rule& r : rules_) {
    for (const Word* side : {&r.lhs, &r.rhs})
      for (Symbol s : *side)
        if (!alphabet_.contains(s))
          throw ConstructionError("rule uses a symbol outside the alphabet");
    if (r.lhs.size() <= r.rhs.size())
      throw ConstructionError("rule '" + format_rule(alphabet_, r) +
                              "' is not length reducing");
    if (!seen.emplace(r.lhs, r.anchored).second)
      throw ConstructionError("duplicate left hand side in rule '" +
                              format_rule(alphabet_, r) + "'");
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
  build_index();
}

void Eda::build_index() {
  const std::size_t width = alphabet_.size();
  nodes_.assign(1, Node{});
  children_.assign(width, -1);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    std::size_t node = 0;
    for (auto it = r.lhs.rbegin(); it != r.lhs.rend(); ++it) {
      const std::size_t slot = node * width + index_of(*it);
      if (children_[slot] < 0) {
        children_[slot] = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(Node{});
        children_.resize(children_.size() + width, -1);
      }
      node = static_cast<std::size_t>(children_[slot]);
    }
    (r.anchored ? nodes_[node].anchored : nodes_[node].plain) =
        static_cast<std::int32_t>(i);
  }
}

Eda Eda::with_rules(std::span<const Rule> extra) const {
  std::vector<Rule> all = rules_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Eda(alphabet_, std::move(all));
}

Eda Eda::without_rule(WordView lhs, bool anchored) const {
  std::vector<Rule> kept;
  for (const Rule& r : rules_)
    if (!(r.anchored == anchored && std::equal(r.lhs.begin(), r.lhs.end(), lhs.begin(), lhs.end())))
      kept.push_back(r);
  return Eda(alphabet_, std::move(kept));
}

std::optional<std::size_t> Eda::match_ending_at(WordView w, std::size_t end,
                                                bool plain_only) const {
  std::int32_t best = -1;
  std::size_t node = 0;
  for (std::size_t depth = 1; depth <= end && depth <= max_lhs_; ++depth) {
    const std::int32_t next = child(node, w[end - depth]);
    if (next < 0) break;
    node = static_cast<std::size_t>(next);
    const Node& n = nodes_[node];
    // Deeper matches are longer, so later hits replace earlier ones; at equal
    // depth the anchored rule is preferred.
    if (!plain_only && n.anchored >= 0 && depth == end)
      best = n.anchored;
    else if (n.plain >= 0)
      best = n.plain;
  }
  if (best < 0) return std::nullopt;
  return static_cast<std::size_t>(best);
}

void Eda::feed(ReducerState& state, Symbol letter) const {
  if (!alphabet_.contains(letter))
    throw AlphabetError("letter outside the eda alphabet");
  ++state.letters_consumed;
  Word& tape = state.tape;
  Word pending;  // letters still to be read, next one at the back
  std::size_t cascade = 0;
  tape.push_back(letter);
  for (;;) {
    if (auto m = match_ending_at(tape, tape.size())) {
      const Rule& r = rules_[*m];
      tape.resize(tape.size() - r.lhs.size());
      pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
      ++state.applications;
      ++cascade;
    }
    if (pending.empty()) break;
    tape.push_back(pending.back());
    pending.pop_back();
  }
  state.max_cascade = std::max(state.max_cascade, cascade);
}

ReducerState Eda::reduce_stream_word(WordView w) const {
  ReducerState st;
  for (Symbol s : w) feed(st, s);
  return st;
}

ReducerState Eda::reduce_batch(WordView w) const {
  ReducerState st;
  st.tape.assign(w.begin(), w.end());
  st.letters_consumed = w.size();
  std::vector<std::size_t> charged(w.size(), 0);
  // input letter each tape position is charged to; rhs letters inherit the
  // letter whose arrival triggered the rewrite
  std::vector<std::size_t> origin(w.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;

  std::size_t first_end = 1;  // ends before this position are match free
  for (;;) {
    std::optional<std::size_t> hit;
    std::size_t end = first_end;
    for (; end <= st.tape.size(); ++end) {
      if ((hit = match_ending_at(st.tape, end))) break;
    }
    if (!hit) break;
    const Rule& r = rules_[*hit];
    const std::size_t start = end - r.lhs.size();
    const std::size_t owner = origin[end - 1];
    ++charged[owner];
    const auto from = static_cast<std::ptrdiff_t>(start);
    const auto to = static_cast<std::ptrdiff_t>(end);
    st.tape.erase(st.tape.begin() + from, st.tape.begin() + to);
    st.tape.insert(st.tape.begin() + from, r.rhs.begin(), r.rhs.end());
    origin.erase(origin.begin() + from, origin.begin() + to);
    origin.insert(origin.begin() + from, r.rhs.size(), owner);
    ++st.applications;
    first_end = start + 1;
  }
  for (std::size_t c : charged) st.max_cascade = std::max(st.max_cascade, c);
  return st;
}

bool Eda::is_reduced(WordView w) const {
  for (std::size_t end = 1; end <= w.size(); ++end)
    if (match_ending_at(w, end)) return false;
  return true;
}

bool Eda::is_plain_reduced(WordView w) const {
  for (std::size_t end = 1; end <= w.size(); ++end)
    if (match_ending_at(w, end, true)) return false;
  return true;
}

std::string format_rule(const Alphabet& alphabet, const Rule& rule) {
  std::string out = rule.anchored ? "H" : "";
  const std::string lhs = format_word(alphabet, rule.lhs);
  if (!out.empty() && !lhs.empty()) out += ' ';
  out += lhs;
  out += " ->";
  const std::string rhs = format_word(alphabet, rule.rhs);
  if (!rhs.empty()) out += ' ' + rhs;
  return out;
}

Eda read_rules(std::istream& in, const Alphabet& alphabet) {
  std::vector<Rule> rules;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw ParseError("rule line " + std::to_string(line_no) + " lacks '->'");
    std::istringstream lhs_in(line.substr(0, arrow));
    Rule r;
    bool first = true;
    for (std::string tok; lhs_in >> tok; first = false) {
      if (first && tok == "H") {
        r.anchored = true;
        continue;
      }
      r.lhs.push_back(alphabet.lookup(tok));
    }
    r.rhs = parse_word(alphabet, std::string_view(line).substr(arrow + 2));
    rules.push_back(std::move(r));
  }
  return Eda(alphabet, std::move(rules));
}

void write_rules(std::ostream& out, const Eda& eda) {
  for (const Rule& r : eda.rules()) out << format_rule(eda.alphabet(), r) << '\n';
}

}  // namespace gwp
