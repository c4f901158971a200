#pragma once

#include <vector>

#include "gwp/alphabet.hpp"
#include "gwp/membership.hpp"
#include "gwp/xgraph.hpp"

namespace gwp {

/// Folds the wedge of generator loops at the base into the Stallings core of
/// K = <sub> in the free group on `alphabet`.  Vertices are numbered in
/// breadth-first order from the base (which is 0), visiting symbols in
/// declaration order, so the result does not depend on generator order.
/// Hanging trees away from the base are pruned.
XGraph stallings_fold(const SubgroupSpec& sub, const Alphabet& alphabet);

/// True iff the freely reduced word `w` labels a loop at the core's base.
/// Throws PreconditionError when `w` is not freely reduced.
bool core_membership(const XGraph& core, WordView w);

/// Membership in a finitely generated subgroup of a free group, backed by
/// its Stallings core.
///
/// The Schreier graph is the core with trees hung on its missing edges, so a
/// freely reduced word first runs inside the core and then leaves it for
/// good.  The coset key is the shortlex path to the exit vertex followed by
/// the part of the word that was not read.
class CoreMembership final : public SubgroupMembership {
 public:
  explicit CoreMembership(XGraph core);
  CoreMembership(const SubgroupSpec& sub, const Alphabet& alphabet)
      : CoreMembership(stallings_fold(sub, alphabet)) {}

  const Alphabet& alphabet() const noexcept override { return core_.alphabet(); }
  bool contains(WordView w) const override;
  std::optional<Word> coset_key(WordView w) const override;

  const XGraph& core() const noexcept { return core_; }

 private:
  XGraph core_;
  std::vector<Word> paths_;
};

}  // namespace gwp
