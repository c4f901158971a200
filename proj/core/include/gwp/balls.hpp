#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gwp/alphabet.hpp"
#include "gwp/membership.hpp"
#include "gwp/oracle.hpp"
#include "gwp/xgraph.hpp"

namespace gwp {

inline constexpr std::size_t kDefaultVertexBudget = 4'000'000;

/// A closed ball of a Schreier graph, explored breadth-first from a centre.
/// `paths[v]` is the shortlex-least word leading from the centre to v and
/// `distance[v]` its length.
struct CosetBall {
  XGraph graph;
  Word centre;
  std::vector<Word> paths;
  std::vector<std::size_t> distance;

  /// centre . paths[v], a word for the coset at v.
  Word representative(Vertex v) const { return concat(centre, paths[v]); }
};

/// Breadth-first exploration of the cosets Hg within distance `radius` of
/// H.centre.  Cosets are identified with `member.coset_key` when available;
/// otherwise candidates in the neighbouring BFS layers are compared with
/// `member.same_coset`, memoised by element normal form.  Throws
/// ResourceError once more than `budget` vertices are needed.
CosetBall explore_cosets(const SubgroupMembership& member,
                         const NormalFormOracle& oracle, WordView centre,
                         std::size_t radius,
                         std::size_t budget = kDefaultVertexBudget);

/// Breadth-first ball of group elements around the identity, with shortlex
/// geodesic paths.  Throws OracleError when the oracle's canonical forms are
/// not idempotent.
CosetBall element_ball(const NormalFormOracle& oracle, std::size_t radius,
                       std::size_t budget = kDefaultVertexBudget);

/// The closed k-ball of the Cayley graph around the identity.  Throws
/// OracleError when the oracle's canonical forms are not idempotent.
XGraph cayley_ball(const NormalFormOracle& oracle, std::size_t k);

/// The closed k-ball of the Schreier graph around H.centre.
XGraph schreier_ball(const SubgroupMembership& member,
                     const NormalFormOracle& oracle, WordView centre,
                     std::size_t k);

struct BallWitness {
  Word path;      // from the first graph's base to the mismatching vertex
  Symbol symbol;  // the edge label on which the graphs disagree
};

struct BallReport {
  Vertex centre = 0;
  Word centre_word;
  std::size_t radius = 0;
  bool passed = true;
  std::optional<BallWitness> witness;
};

/// Compares the k-balls around the bases of two X-graphs by a synchronised
/// breadth-first walk.  The k-ball holds the vertices within distance k and
/// the edges leaving vertices within distance k - 1, i.e. everything a walk
/// of length <= k can see.  Determinism makes the base-preserving
/// isomorphism unique, so the walk decides isomorphism.  Throws
/// InsufficientRadiusError when either graph is known to a radius below k.
BallReport ball_isomorphic(const XGraph& g1, const XGraph& g2, std::size_t k);

/// Bounded empirical GIB(k) check: compares B_k(p) against the Cayley
/// k-ball for every Schreier vertex p with min_distance <= d(H, p) <=
/// radius_limit.  Returns every report in breadth-first order of p.  Centres
/// are spread over `jobs` threads.
std::vector<BallReport> gib_check(const SubgroupMembership& member,
                                  const NormalFormOracle& oracle, std::size_t k,
                                  std::size_t min_distance,
                                  std::size_t radius_limit, unsigned jobs = 1);

}  // namespace gwp
