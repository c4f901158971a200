#include "gwp/xgraph.hpp"

#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gwp/error.hpp"

namespace gwp {

XGraph::XGraph(Alphabet alphabet, std::size_t vertices, Vertex base)
    : alphabet_(std::move(alphabet)),
      count_(vertices),
      base_(base),
      edges_(vertices * alphabet_.size(), kNoVertex) {
  if (vertices == 0) throw ConfigError("an X-graph needs at least one vertex");
  if (base >= vertices) throw ConfigError("base vertex out of range");
}

void XGraph::set_base(Vertex v) {
  if (v >= count_) throw ConfigError("base vertex out of range");
  base_ = v;
}

Vertex XGraph::add_vertex() {
  edges_.resize(edges_.size() + alphabet_.size(), kNoVertex);
  return static_cast<Vertex>(count_++);
}

std::size_t XGraph::slot(Vertex p, Symbol x) const {
  if (p >= count_) throw PreconditionError("vertex out of range");
  if (!alphabet_.contains(x)) throw AlphabetError("symbol outside graph alphabet");
  return static_cast<std::size_t>(p) * alphabet_.size() + index_of(x);
}

void XGraph::connect(Vertex p, Symbol x, Vertex q) {
  const Symbol xi = alphabet_.inverse(x);
  Vertex& fwd = edges_[slot(p, x)];
  Vertex& back = edges_[slot(q, xi)];
  if ((fwd != kNoVertex && fwd != q) || (back != kNoVertex && back != p))
    throw InvariantError("edge " + std::to_string(p) + " " + alphabet_.name(x) +
                         " " + std::to_string(q) +
                         " conflicts with an existing edge");
  fwd = q;
  back = p;
}

std::size_t XGraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (Vertex t : edges_) n += t != kNoVertex;
  return n;
}

std::size_t XGraph::degree(Vertex p) const {
  std::size_t n = 0;
  for (std::size_t s = 0; s < alphabet_.size(); ++s)
    n += edges_[slot(p, symbol_at(s))] != kNoVertex;
  return n;
}

std::optional<Vertex> XGraph::walk(Vertex from, WordView w) const {
  Vertex v = from;
  for (Symbol s : w) {
    v = edges_[slot(v, s)];
    if (v == kNoVertex) return std::nullopt;
  }
  return v;
}

std::vector<std::size_t> XGraph::distances_from(Vertex from) const {
  std::vector<std::size_t> dist(count_, kUnreachable);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < alphabet_.size(); ++s) {
      const Vertex t = edges_[slot(v, symbol_at(s))];
      if (t != kNoVertex && dist[t] == kUnreachable) {
        dist[t] = dist[v] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

void write_graph(std::ostream& out, const XGraph& g) {
  const Alphabet& a = g.alphabet();
  out << "xgraph " << g.vertex_count() << ' ' << g.base() << '\n';
  for (Vertex p = 0; p < g.vertex_count(); ++p) {
    for (std::size_t gi = 0; gi < a.generator_count(); ++gi) {
      const Symbol x = a.generator(gi);
      const auto q = g.target(p, x);
      if (!q) continue;
      if (a.is_self_inverse(x) && *q < p) continue;
      out << p << ' ' << a.name(x) << ' ' << *q << '\n';
    }
  }
}

XGraph read_graph(std::istream& in, const Alphabet& alphabet) {
  std::string line;
  std::size_t n = 0;
  Vertex base = 0;
  bool header = false;
  std::optional<XGraph> g;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!header) {
      if (first != "xgraph" || !(ls >> n >> base))
        throw ParseError("graph dump must start with 'xgraph <n> <base>'");
      header = true;
      g.emplace(alphabet, n, base);
      continue;
    }
    std::string label;
    Vertex dst = 0;
    Vertex src = 0;
    try {
      src = static_cast<Vertex>(std::stoul(first));
    } catch (const std::exception&) {
      throw ParseError("bad edge line: " + line);
    }
    if (!(ls >> label >> dst)) throw ParseError("bad edge line: " + line);
    if (src >= n || dst >= n) throw ParseError("edge endpoint out of range: " + line);
    g->connect(src, alphabet.lookup(label), dst);
  }
  if (!g) throw ParseError("empty graph dump");
  return std::move(*g);
}

}  // namespace gwp
