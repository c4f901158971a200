#include "gwp/eda_build.hpp"

#include <algorithm>

#include "gwp/balls.hpp"
#include "gwp/error.hpp"
#include "gwp/words.hpp"

namespace gwp {

namespace {

bool geodesic(const CosetBall& ball, WordView w) {
  const auto v = ball.graph.walk(0, w);
  return v && ball.distance[*v] == w.size();
}

}  // namespace

Eda generate_dehn_rules(const NormalFormOracle& oracle, std::size_t k) {
  if (k < 2) throw PreconditionError("Dehn rules need k >= 2");
  const CosetBall ball = element_ball(oracle, k);
  std::vector<Rule> rules;
  walk_words(oracle.alphabet(), k, [&](const Word& w) {
    if (w.empty()) return true;
    const Vertex v = *ball.graph.walk(0, w);
    if (ball.distance[v] == w.size()) return true;
    if (geodesic(ball, WordView(w).subspan(1))) rules.push_back({w, ball.paths[v], false});
    return false;
  });
  return Eda(oracle.alphabet(), std::move(rules));
}

std::vector<Rule> generate_anchored_rules(const SubgroupMembership& member,
                                          const NormalFormOracle& oracle, std::size_t R) {
  if (R < 1) throw PreconditionError("anchored rules need R >= 1");
  const CosetBall cosets = explore_cosets(member, oracle, {}, R);
  const CosetBall elements = element_ball(oracle, R);
  std::vector<Rule> rules;
  walk_words(oracle.alphabet(), R, [&](const Word& w) {
    if (w.empty()) return true;
    const Vertex c = *cosets.graph.walk(0, w);
    if (cosets.distance[c] == w.size()) return true;
    if (geodesic(elements, w)) rules.push_back({w, cosets.paths[c], true});
    return false;
  });
  return rules;
}

Eda adjoin_absorption_rules(const Eda& eda, std::span<const Symbol> symbols) {
  std::vector<Rule> extra;
  for (Symbol z : symbols) {
    if (!eda.alphabet().contains(z)) throw ConstructionError("absorption symbol outside the alphabet");
    extra.push_back({{z}, {}, true});
  }
  return eda.with_rules(extra);
}

std::vector<Symbol> subgroup_letters(const SubgroupMembership& member) {
  std::vector<Symbol> out;
  for (std::size_t s = 0; s < member.alphabet().size(); ++s) {
    const Word w{symbol_at(s)};
    if (member.contains(w)) out.push_back(symbol_at(s));
  }
  return out;
}

Eda quasiconvex_eda(const SubgroupMembership& member, const NormalFormOracle& oracle,
                    std::size_t k, std::size_t R) {
  const Eda dehn = generate_dehn_rules(oracle, k);
  const auto anchored = generate_anchored_rules(member, oracle, R);
  return dehn.with_rules(anchored);
}

}  // namespace gwp
