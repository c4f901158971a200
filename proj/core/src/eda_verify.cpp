#include "gwp/eda_verify.hpp"

#include "gwp/balls.hpp"
#include "gwp/error.hpp"
#include "gwp/parallel.hpp"
#include "gwp/words.hpp"

namespace gwp {

namespace {

void keep_least(std::optional<Word>& slot, const Word& w) {
  if (!slot || shortlex_less(w, *slot)) slot = w;
}

struct RealtimeWalker {
  const Eda& eda;
  const CosetTable& table;
  std::size_t max_length;
  std::optional<std::size_t> R;
  RealtimeReport report;
  std::vector<ReducerState> states;
  Word word;

  void check(const ReducerState& s, Vertex coset) {
    ++report.words_checked;
    const std::size_t tape = s.tape.size();
    const std::size_t len = table.length(coset);
    if ((tape == 0) != (len == 0)) {
      if (report.membership_mismatches++ == 0) report.membership_witness = word;
    } else if (len > 0) {
      const Fraction r{tape, len};
      if (report.max_ratio < r) {
        report.max_ratio = r;
        report.max_ratio_witness = word;
      }
    }
    if (R && tape > *R) {
      ++report.distance_checked;
      const auto d = table.coset_length(s.tape);
      if (!d || 2 * *d < tape) {
        if (report.distance_violations++ == 0) report.distance_witness = word;
      }
    }
  }

  void descend(std::size_t depth, Vertex coset) {
    check(states[depth], coset);
    if (depth == max_length) return;
    const Alphabet& a = eda.alphabet();
    for (std::size_t si = 0; si < a.size(); ++si) {
      const Symbol s = symbol_at(si);
      states[depth + 1] = states[depth];
      eda.feed(states[depth + 1], s);
      word.push_back(s);
      descend(depth + 1, table.graph().raw_target(coset, s));
      word.pop_back();
    }
  }
};

}  // namespace

PdeReport verify_pde(const Eda& eda, const NormalFormOracle& oracle, std::size_t D,
                     std::size_t E, std::optional<std::size_t> max_length) {
  if (D < E) throw PreconditionError("verify_pde needs D >= E");
  if (!(eda.alphabet() == oracle.alphabet()))
    throw PreconditionError("eda and oracle use different alphabets");
  PdeReport report;
  report.D = D;
  report.E = E;
  report.max_length = std::max(max_length.value_or(2 * D), E);
  const CosetBall ball = element_ball(oracle, report.max_length);
  walk_words(eda.alphabet(), report.max_length, [&](const Word& w) {
    if (!eda.is_plain_reduced(w)) return false;
    const std::size_t g = ball.distance[*ball.graph.walk(0, w)];
    if (w.size() <= E) {
      ++report.short_words_checked;
      if (g < w.size()) keep_least(report.geodesic_violation, w);
    }
    ++report.long_words_checked;
    if (g <= D && g < w.size()) keep_least(report.d_geodesic_violation, w);
    return true;
  });
  return report;
}

RealtimeReport verify_realtime_bound(const Eda& eda, const CosetTable& table,
                                     std::size_t max_length, std::optional<std::size_t> R,
                                     unsigned jobs) {
  if (max_length > table.radius())
    throw PreconditionError("coset table radius " + std::to_string(table.radius()) +
                            " is below the word length " + std::to_string(max_length));
  if (!(eda.alphabet() == table.graph().alphabet()))
    throw PreconditionError("eda and coset table use different alphabets");
  const Alphabet& a = eda.alphabet();

  // The empty word, then one subtree per first letter.
  RealtimeReport total;
  total.max_length = max_length;
  total.R = R;
  std::vector<RealtimeReport> parts(max_length == 0 ? 0 : a.size());
  {
    RealtimeWalker root{eda, table, max_length, R, {}, {ReducerState{}}, {}};
    root.check(root.states[0], 0);
    parts.insert(parts.begin(), root.report);
  }
  parallel_for(parts.size() - 1, jobs, [&](std::size_t i) {
    RealtimeWalker w{eda, table, max_length, R, {}, std::vector<ReducerState>(max_length + 1), {}};
    const Symbol s = symbol_at(i);
    eda.feed(w.states[1], s);
    w.word.push_back(s);
    w.descend(1, table.graph().raw_target(0, s));
    parts[i + 1] = std::move(w.report);
  });

  for (const RealtimeReport& p : parts) {
    total.words_checked += p.words_checked;
    if (total.max_ratio < p.max_ratio) {
      total.max_ratio = p.max_ratio;
      total.max_ratio_witness = p.max_ratio_witness;
    }
    if (p.membership_mismatches && !total.membership_witness)
      total.membership_witness = p.membership_witness;
    total.membership_mismatches += p.membership_mismatches;
    total.distance_checked += p.distance_checked;
    if (p.distance_violations && !total.distance_witness)
      total.distance_witness = p.distance_witness;
    total.distance_violations += p.distance_violations;
  }
  return total;
}

}  // namespace gwp
