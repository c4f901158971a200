#include "gwp/balls.hpp"

#include <deque>
#include <unordered_map>

#include "gwp/error.hpp"
#include "gwp/parallel.hpp"

namespace gwp {

namespace {

/// H = {1} over a borrowed oracle.
class ElementCosets final : public SubgroupMembership {
 public:
  explicit ElementCosets(const NormalFormOracle& oracle) : oracle_(oracle) {}
  const Alphabet& alphabet() const noexcept override { return oracle_.alphabet(); }
  bool contains(WordView w) const override { return oracle_.is_identity(w); }
  std::optional<Word> coset_key(WordView w) const override {
    return oracle_.normal_form(w);
  }

 private:
  const NormalFormOracle& oracle_;
};

class CosetExplorer {
 public:
  CosetExplorer(const SubgroupMembership& member, const NormalFormOracle& oracle,
                WordView centre, std::size_t budget)
      : member_(member),
        oracle_(oracle),
        budget_(budget),
        ball_{XGraph(member.alphabet(), 1, 0), Word(centre.begin(), centre.end()), {Word{}}, {0}} {
    keyed_ = member_.coset_key(centre).has_value();
    layers_.push_back({0});
    remember(0, ball_.centre);
  }

  CosetBall run(std::size_t radius) {
    const Alphabet& a = member_.alphabet();
    for (Vertex v = 0; v < ball_.graph.vertex_count(); ++v) {
      const std::size_t d = ball_.distance[v];
      const Word rep = ball_.representative(v);
      Word probe = rep;
      probe.push_back(Symbol{});
      for (std::size_t s = 0; s < a.size(); ++s) {
        probe.back() = symbol_at(s);
        Vertex t = locate(probe, d);
        if (t == kNoVertex) {
          if (d >= radius) continue;
          t = add(v, symbol_at(s), probe);
        }
        try {
          ball_.graph.connect(v, symbol_at(s), t);
        } catch (const InvariantError& e) {
          throw OracleError(std::string("inconsistent coset identification: ") + e.what());
        }
      }
    }
    ball_.graph.set_complete_radius(radius);
    return std::move(ball_);
  }

 private:
  void remember(Vertex v, const Word& w) {
    if (keyed_)
      by_key_.emplace(*member_.coset_key(w), v);
    else
      by_element_.emplace(oracle_.normal_form(w), v);
  }

  Vertex locate(const Word& w, std::size_t parent_distance) {
    if (keyed_) {
      auto it = by_key_.find(*member_.coset_key(w));
      return it == by_key_.end() ? kNoVertex : it->second;
    }
    Word nf = oracle_.normal_form(w);
    if (auto it = by_element_.find(nf); it != by_element_.end()) return it->second;
    const std::size_t lo = parent_distance == 0 ? 0 : parent_distance - 1;
    for (std::size_t layer = lo; layer <= parent_distance + 1 && layer < layers_.size(); ++layer) {
      for (Vertex c : layers_[layer]) {
        if (member_.same_coset(w, ball_.representative(c))) {
          by_element_.emplace(std::move(nf), c);
          return c;
        }
      }
    }
    return kNoVertex;
  }

  Vertex add(Vertex parent, Symbol s, const Word& w) {
    if (ball_.graph.vertex_count() >= budget_)
      throw ResourceError("coset exploration exceeded " + std::to_string(budget_) +
                              " vertices",
                          ball_.distance[parent]);
    const Vertex t = ball_.graph.add_vertex();
    const std::size_t d = ball_.distance[parent] + 1;
    Word path = ball_.paths[parent];
    path.push_back(s);
    ball_.paths.push_back(std::move(path));
    ball_.distance.push_back(d);
    if (layers_.size() <= d) layers_.resize(d + 1);
    layers_[d].push_back(t);
    remember(t, w);
    return t;
  }

  const SubgroupMembership& member_;
  const NormalFormOracle& oracle_;
  std::size_t budget_;
  CosetBall ball_;
  bool keyed_ = false;
  std::unordered_map<Word, Vertex, WordHash> by_key_;
  std::unordered_map<Word, Vertex, WordHash> by_element_;
  std::vector<std::vector<Vertex>> layers_;
};

}  // namespace

CosetBall explore_cosets(const SubgroupMembership& member,
                         const NormalFormOracle& oracle, WordView centre,
                         std::size_t radius, std::size_t budget) {
  if (!(member.alphabet() == oracle.alphabet()))
    throw PreconditionError("membership and oracle use different alphabets");
  return CosetExplorer(member, oracle, centre, budget).run(radius);
}

CosetBall element_ball(const NormalFormOracle& oracle, std::size_t radius,
                       std::size_t budget) {
  if (!oracle.normal_form({}).empty())
    throw OracleError("oracle does not map the empty word to itself");
  ElementCosets elements(oracle);
  CosetBall ball = explore_cosets(elements, oracle, {}, radius, budget);
  for (const Word& path : ball.paths) {
    const Word nf = oracle.normal_form(path);
    if (oracle.normal_form(nf) != nf)
      throw OracleError("oracle is not idempotent on '" +
                        format_word(oracle.alphabet(), nf) + "'");
  }
  return ball;
}

XGraph cayley_ball(const NormalFormOracle& oracle, std::size_t k) {
  return std::move(element_ball(oracle, k).graph);
}

XGraph schreier_ball(const SubgroupMembership& member,
                     const NormalFormOracle& oracle, WordView centre,
                     std::size_t k) {
  return std::move(explore_cosets(member, oracle, centre, k).graph);
}

BallReport ball_isomorphic(const XGraph& g1, const XGraph& g2, std::size_t k) {
  for (const XGraph* g : {&g1, &g2}) {
    if (g->complete_radius() && *g->complete_radius() < k)
      throw InsufficientRadiusError("graph is known to radius " +
                                    std::to_string(*g->complete_radius()) +
                                    " but the comparison needs " + std::to_string(k));
  }
  if (!(g1.alphabet() == g2.alphabet()))
    throw PreconditionError("ball comparison across different alphabets");

  const Alphabet& a = g1.alphabet();
  BallReport report;
  report.centre = g1.base();
  report.radius = k;

  std::vector<Vertex> to2(g1.vertex_count(), kNoVertex);
  std::vector<Vertex> to1(g2.vertex_count(), kNoVertex);
  std::vector<std::size_t> dist(g1.vertex_count(), 0);
  std::vector<Word> path(g1.vertex_count());
  std::deque<Vertex> queue{g1.base()};
  to2[g1.base()] = g2.base();
  to1[g2.base()] = g1.base();

  auto fail = [&](Vertex u, Symbol s) {
    report.passed = false;
    report.witness = BallWitness{path[u], s};
    return report;
  };

  while (!queue.empty()) {
    const Vertex u1 = queue.front();
    queue.pop_front();
    const Vertex u2 = to2[u1];
    const std::size_t d = dist[u1];
    if (d >= k) continue;
    for (std::size_t si = 0; si < a.size(); ++si) {
      const Symbol s = symbol_at(si);
      const Vertex t1 = g1.raw_target(u1, s);
      const Vertex t2 = g2.raw_target(u2, s);
      const bool in1 = t1 != kNoVertex;
      const bool in2 = t2 != kNoVertex;
      if (in1 != in2) return fail(u1, s);
      if (!in1) continue;
      const bool seen1 = to2[t1] != kNoVertex;
      const bool seen2 = to1[t2] != kNoVertex;
      if (seen1 || seen2) {
        if (to2[t1] != t2 || to1[t2] != t1) return fail(u1, s);
        continue;
      }
      to2[t1] = t2;
      to1[t2] = t1;
      dist[t1] = d + 1;
      path[t1] = path[u1];
      path[t1].push_back(s);
      queue.push_back(t1);
    }
  }
  return report;
}

std::vector<BallReport> gib_check(const SubgroupMembership& member,
                                  const NormalFormOracle& oracle, std::size_t k,
                                  std::size_t min_distance,
                                  std::size_t radius_limit, unsigned jobs) {
  if (min_distance > radius_limit)
    throw PreconditionError("gib_check needs min_distance <= radius_limit");
  const CosetBall sigma = explore_cosets(member, oracle, {}, radius_limit);
  const XGraph cayley = cayley_ball(oracle, k);

  std::vector<Vertex> centres;
  for (Vertex v = 0; v < sigma.graph.vertex_count(); ++v)
    if (sigma.distance[v] >= min_distance) centres.push_back(v);

  std::vector<BallReport> reports(centres.size());
  parallel_for(centres.size(), jobs, [&](std::size_t i) {
    const Word rep = sigma.representative(centres[i]);
    const XGraph local = schreier_ball(member, oracle, rep, k);
    BallReport r = ball_isomorphic(local, cayley, k);
    r.centre = centres[i];
    r.centre_word = rep;
    reports[i] = std::move(r);
  });
  return reports;
}

}  // namespace gwp
