#include "gwp/stallings.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "gwp/error.hpp"

namespace gwp {

namespace {

struct Edge {
  Vertex from;
  Symbol label;
  Vertex to;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

XGraph stallings_fold(const SubgroupSpec& sub, const Alphabet& alphabet) {
  // Wedge of loops at vertex 0, both directions of every edge listed.
  std::vector<Edge> edges;
  Vertex next = 1;
  for (const Word& g : sub.generators()) {
    Vertex cur = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vertex to = i + 1 == g.size() ? 0 : next++;
      edges.push_back({cur, g[i], to});
      edges.push_back({to, alphabet.inverse(g[i]), cur});
      cur = to;
    }
  }

  UnionFind uf(next);
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<Vertex, Symbol>, Vertex> seen;
    for (const Edge& e : edges) {
      const Vertex p = uf.find(e.from);
      const Vertex q = uf.find(e.to);
      auto [it, fresh] = seen.emplace(std::pair{p, e.label}, q);
      if (!fresh && uf.find(it->second) != q) {
        uf.unite(it->second, q);
        changed = true;
      }
    }
  }

  // Collapse to classes and drop duplicate edges.
  std::map<std::pair<Vertex, Symbol>, Vertex> folded;
  for (const Edge& e : edges)
    folded.emplace(std::pair{uf.find(e.from), e.label}, uf.find(e.to));

  // Prune hanging trees that do not contain the base.
  std::map<Vertex, std::size_t> degree;
  for (const auto& [key, to] : folded) ++degree[key.first];
  std::vector<bool> dead(next, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [v, d] : degree) {
      if (v == 0 || dead[v] || d > 1) continue;
      dead[v] = true;
      changed = true;
      for (const auto& [key, to] : folded)
        if (key.first == v && !dead[to]) --degree[to];
    }
  }

  // Breadth-first renumbering from the base in symbol order.
  std::map<Vertex, Vertex> renumber{{0, 0}};
  std::deque<Vertex> queue{0};
  std::vector<std::pair<Vertex, Symbol>> order;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
      auto it = folded.find({v, symbol_at(s)});
      if (it == folded.end() || dead[it->second]) continue;
      if (renumber.emplace(it->second, static_cast<Vertex>(renumber.size())).second)
        queue.push_back(it->second);
    }
  }

  XGraph core(alphabet, renumber.size(), 0);
  for (const auto& [key, to] : folded) {
    if (dead[key.first] || dead[to]) continue;
    core.connect(renumber.at(key.first), key.second, renumber.at(to));
  }
  return core;
}

bool core_membership(const XGraph& core, WordView w) {
  if (!is_freely_reduced(core.alphabet(), w))
    throw PreconditionError("core_membership expects a freely reduced word, got '" +
                            format_word(core.alphabet(), w) + "'");
  const auto end = core.walk(core.base(), w);
  return end && *end == core.base();
}

CoreMembership::CoreMembership(XGraph core)
    : core_(std::move(core)), paths_(core_.vertex_count()) {
  std::vector<bool> seen(core_.vertex_count(), false);
  std::deque<Vertex> queue{core_.base()};
  seen[core_.base()] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < alphabet().size(); ++s) {
      const auto t = core_.target(v, symbol_at(s));
      if (!t || seen[*t]) continue;
      seen[*t] = true;
      paths_[*t] = paths_[v];
      paths_[*t].push_back(symbol_at(s));
      queue.push_back(*t);
    }
  }
}

bool CoreMembership::contains(WordView w) const {
  return core_membership(core_, free_reduce(alphabet(), w));
}

std::optional<Word> CoreMembership::coset_key(WordView w) const {
  const Word r = free_reduce(alphabet(), w);
  Vertex v = core_.base();
  std::size_t read = 0;
  for (; read < r.size(); ++read) {
    const Vertex t = core_.raw_target(v, r[read]);
    if (t == kNoVertex) break;
    v = t;
  }
  Word key = paths_[v];
  key.insert(key.end(), r.begin() + static_cast<std::ptrdiff_t>(read), r.end());
  return key;
}

}  // namespace gwp
