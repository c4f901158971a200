#include "gwp/bruteforce.hpp"

#include <algorithm>

#include "gwp/error.hpp"

namespace gwp {

CosetTable::CosetTable(CosetBall ball, std::size_t radius)
    : ball_(std::move(ball)), radius_(radius) {}

std::optional<std::size_t> CosetTable::coset_length(WordView w) const {
  if (auto v = locate(w)) return ball_.distance[*v];
  return std::nullopt;
}

std::optional<bool> CosetTable::is_member(WordView w) const {
  if (auto v = locate(w)) return *v == 0;
  return std::nullopt;
}

CosetTable coset_bfs(const SubgroupMembership& member, const NormalFormOracle& oracle,
                     std::size_t radius, std::size_t budget) {
  return CosetTable(explore_cosets(member, oracle, {}, radius, budget), radius);
}

SubgroupEnumeration::SubgroupEnumeration(const SubgroupSpec& sub,
                                         std::shared_ptr<const NormalFormOracle> oracle,
                                         std::size_t max_products,
                                         std::size_t complete_radius)
    : oracle_(std::move(oracle)), complete_radius_(complete_radius) {
  const Alphabet& a = oracle_->alphabet();
  std::vector<Word> gens;
  for (const Word& g : sub.generators()) {
    gens.push_back(oracle_->normal_form(g));
    gens.push_back(oracle_->normal_form(invert_word(a, g)));
  }
  std::vector<Word> frontier{Word{}};
  set_.insert(Word{});
  for (std::size_t n = 0; n < max_products && !frontier.empty(); ++n) {
    std::vector<Word> next;
    for (const Word& e : frontier) {
      for (const Word& g : gens) {
        Word p = oracle_->normal_form(concat(e, g));
        if (set_.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(set_.begin(), set_.end());
  std::sort(elements_.begin(), elements_.end(),
            [](const Word& u, const Word& v) { return shortlex_less(u, v); });
}

std::optional<bool> SubgroupEnumeration::verdict(WordView w) const {
  const Word nf = oracle_->normal_form(w);
  if (set_.count(nf)) return true;
  if (nf.size() <= complete_radius_) return false;
  return std::nullopt;
}

bool SubgroupEnumeration::contains(WordView w) const {
  if (auto v = verdict(w)) return *v;
  throw RadiusExceededError("'" + format_word(alphabet(), w) +
                            "' lies beyond the enumerated radius " +
                            std::to_string(complete_radius_));
}

std::optional<Word> SubgroupEnumeration::coset_key(WordView w) const {
  const Word nf = oracle_->normal_form(w);
  const std::size_t n = nf.size();
  if (2 * n > complete_radius_)
    throw RadiusExceededError("coset of '" + format_word(alphabet(), w) +
                              "' needs subgroup elements beyond radius " +
                              std::to_string(complete_radius_));
  Word best = nf;
  Word probe;
  for (const Word& h : elements_) {
    if (h.size() > n + best.size()) break;
    probe.assign(h.begin(), h.end());
    probe.insert(probe.end(), nf.begin(), nf.end());
    Word c = oracle_->normal_form(probe);
    if (shortlex_less(c, best)) best = std::move(c);
  }
  return best;
}

}  // namespace gwp
