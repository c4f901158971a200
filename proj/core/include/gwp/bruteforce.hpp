#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "gwp/alphabet.hpp"
#include "gwp/balls.hpp"
#include "gwp/membership.hpp"
#include "gwp/oracle.hpp"
#include "gwp/xgraph.hpp"

namespace gwp {

/// Cosets of H within a radius of H, with BFS-exact geodesic lengths.
class CosetTable {
 public:
  explicit CosetTable(CosetBall ball, std::size_t radius);

  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return ball_.graph.vertex_count(); }
  const XGraph& graph() const noexcept { return ball_.graph; }

  /// The coset H.w, or nullopt if the walk leaves the table.
  std::optional<Vertex> locate(WordView w) const { return ball_.graph.walk(0, w); }
  /// min |g| over g in Hw.  Words of length <= radius always resolve.
  std::optional<std::size_t> coset_length(WordView w) const;
  std::optional<bool> is_member(WordView w) const;

  std::size_t length(Vertex v) const { return ball_.distance[v]; }
  /// Shortlex-least word of the coset.
  const Word& representative(Vertex v) const { return ball_.paths[v]; }

 private:
  CosetBall ball_;
  std::size_t radius_;
};

/// Breadth-first search over the cosets of H up to `radius`.  Throws
/// ResourceError carrying the achieved radius when `budget` cosets are
/// exceeded.
CosetTable coset_bfs(const SubgroupMembership& member, const NormalFormOracle& oracle,
                     std::size_t radius, std::size_t budget = kDefaultVertexBudget);

/// Canonical forms of all products of at most `max_products` generators of
/// H (and their inverses).
///
/// `complete_radius` is the caller's guarantee that every element of H
/// whose canonical form has length <= complete_radius is among them (true
/// for instance when every product of n generators has canonical length >=
/// n).  Verdicts for longer canonical forms are unknown and
/// `contains` throws RadiusExceededError for them.
///
/// The coset key of Hw is the shortlex-least canonical form of h.w over the
/// enumerated h.  It is exact when canonical forms are geodesic and
/// 2|nf(w)| <= complete_radius; otherwise it throws RadiusExceededError.
class SubgroupEnumeration final : public SubgroupMembership {
 public:
  SubgroupEnumeration(const SubgroupSpec& sub,
                      std::shared_ptr<const NormalFormOracle> oracle,
                      std::size_t max_products, std::size_t complete_radius);

  const Alphabet& alphabet() const noexcept override { return oracle_->alphabet(); }
  bool contains(WordView w) const override;
  std::optional<Word> coset_key(WordView w) const override;

  std::optional<bool> verdict(WordView w) const;
  std::size_t complete_radius() const noexcept { return complete_radius_; }
  /// Elements in order of canonical length.
  const std::vector<Word>& elements() const noexcept { return elements_; }

 private:
  std::shared_ptr<const NormalFormOracle> oracle_;
  std::size_t complete_radius_;
  std::vector<Word> elements_;
  std::unordered_set<Word, WordHash> set_;
};

}  // namespace gwp
