#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "gwp/eda.hpp"
#include "gwp/membership.hpp"
#include "gwp/oracle.hpp"
#include "gwp/pda.hpp"
#include "gwp/virtually_free.hpp"
#include "gwp/xgraph.hpp"

namespace gwpcli {

/// Directory searched for relative fixture paths: $GWPKIT_FIXTURES, else
/// the directory configured at build time.
std::filesystem::path fixture_dir();

/// `name` itself when it exists, otherwise `name` under fixture_dir().
/// Throws gwp::ConfigError when neither exists.
std::filesystem::path resolve_fixture(const std::string& name);

struct GroupOptions {
  std::string group = "free:2";  // free:N | abelian:N | vf:FILE
  std::string vf;                // same as --group vf:FILE
  std::optional<std::string> sub;
  std::string core;  // free groups: Stallings core dump instead of --sub
};

/// Group, subgroup and the machines built from them.
struct GroupContext {
  std::string group_text;
  std::string subgroup_text;
  gwp::Alphabet alphabet;  // X
  std::shared_ptr<const gwp::NormalFormOracle> oracle;  // null without normal form data
  std::shared_ptr<const gwp::VirtuallyFreeSpec> vf;     // virtually free groups only
  std::optional<gwp::SubgroupSpec> subgroup;            // H over X when known
  std::shared_ptr<const gwp::SubgroupMembership> member;
  std::optional<gwp::XGraph> core;  // free groups only

  const gwp::NormalFormOracle& require_oracle() const;
  const gwp::SubgroupSpec& require_subgroup() const;
  /// The pushdown automaton for K (free groups: K = H over X).
  const gwp::GwpPda& require_pda() const;
  bool is_free() const noexcept { return core.has_value(); }

  std::shared_ptr<const gwp::GwpPda> pda;
  std::shared_ptr<const gwp::VirtuallyFreeDecider> decider;
};

GroupContext load_group(const GroupOptions& options);

/// Rules from `rules` when given, else Dehn rules of length <= k plus
/// anchored rules of length <= R.
gwp::Eda load_eda(const GroupContext& ctx, const std::string& rules, std::size_t k,
                  std::size_t R);

}  // namespace gwpcli
