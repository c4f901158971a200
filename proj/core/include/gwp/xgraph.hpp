#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "gwp/alphabet.hpp"

namespace gwp {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Deterministic partial edge-labelled graph with the edge involution
/// (p -x-> q iff q -x^-1-> p).  Used for Stallings cores, Cayley balls and
/// Schreier balls.
///
/// `complete_radius()` records how far around the base the graph is known to
/// agree with the object it was cut from; `nullopt` means the graph is the
/// whole object (a Stallings core, a loaded fixture).
class XGraph {
 public:
  XGraph() = default;
  explicit XGraph(Alphabet alphabet, std::size_t vertices = 1, Vertex base = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return count_; }
  Vertex base() const noexcept { return base_; }
  void set_base(Vertex v);

  Vertex add_vertex();

  std::optional<Vertex> target(Vertex p, Symbol x) const {
    const Vertex t = edges_[slot(p, x)];
    if (t == kNoVertex) return std::nullopt;
    return t;
  }
  Vertex raw_target(Vertex p, Symbol x) const { return edges_[slot(p, x)]; }

  /// Adds p -x-> q and its reverse.  Re-adding an existing edge is a no-op;
  /// a conflicting edge throws InvariantError.
  void connect(Vertex p, Symbol x, Vertex q);

  /// Defined (vertex, symbol) pairs, counting both directions of an edge.
  std::size_t edge_count() const noexcept;
  std::size_t degree(Vertex p) const;

  /// Follows `w` from `from`; nullopt when an edge is missing.
  std::optional<Vertex> walk(Vertex from, WordView w) const;

  /// Breadth-first distances from `from`; unreachable vertices get
  /// kUnreachable.
  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> distances_from(Vertex from) const;

  std::optional<std::size_t> complete_radius() const noexcept { return complete_radius_; }
  void set_complete_radius(std::optional<std::size_t> r) noexcept { complete_radius_ = r; }

  friend bool operator==(const XGraph& a, const XGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.count_ == b.count_ &&
           a.base_ == b.base_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t slot(Vertex p, Symbol x) const;

  Alphabet alphabet_;
  std::size_t count_ = 0;
  Vertex base_ = 0;
  std::vector<Vertex> edges_;
  std::optional<std::size_t> complete_radius_;
};

/// Graph dump: `xgraph <n_vertices> <base>` followed by one `src label dst`
/// line per edge.  Only one direction of each edge is written.
void write_graph(std::ostream& out, const XGraph& g);
XGraph read_graph(std::istream& in, const Alphabet& alphabet);

}  // namespace gwp
