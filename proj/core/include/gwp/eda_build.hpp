#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwp/eda.hpp"
#include "gwp/membership.hpp"
#include "gwp/oracle.hpp"

namespace gwp {

inline constexpr std::size_t kDefaultDehnLength = 4;

/// Dehn rules u -> v for every non-geodesic u with |u| <= k whose proper
/// subwords are all geodesic; v is the shortlex-least geodesic for u.
Eda generate_dehn_rules(const NormalFormOracle& oracle, std::size_t k = kDefaultDehnLength);

/// Anchored rules H v1 -> H v2 with |v1| <= R.  v1 is emitted when Hv1 has a
/// strictly shorter representative, every proper prefix of v1 is the
/// shortest word of its coset, and v1 itself is geodesic in G (non-geodesic
/// words are already handled by plain rules).  v2 is the shortlex-least word
/// of Hv1.
std::vector<Rule> generate_anchored_rules(const SubgroupMembership& member,
                                          const NormalFormOracle& oracle, std::size_t R);

/// Adds H z -> H for every z.  Duplicates throw ConstructionError.
Eda adjoin_absorption_rules(const Eda& eda, std::span<const Symbol> symbols);

/// The letters of the alphabet that lie in H.
std::vector<Symbol> subgroup_letters(const SubgroupMembership& member);

/// Dehn rules of length <= k together with anchored rules of length <= R.
Eda quasiconvex_eda(const SubgroupMembership& member, const NormalFormOracle& oracle,
                    std::size_t k, std::size_t R);

}  // namespace gwp
