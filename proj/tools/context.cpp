#include "context.hpp"

#include <cstdlib>
#include <fstream>

#include "gwp/eda_build.hpp"
#include "gwp/error.hpp"
#include "gwp/stallings.hpp"

namespace gwpcli {

namespace fs = std::filesystem;
using namespace gwp;

fs::path fixture_dir() {
  if (const char* env = std::getenv("GWPKIT_FIXTURES"); env && *env) return env;
  return GWPKIT_DEFAULT_FIXTURES;
}

fs::path resolve_fixture(const std::string& name) {
  if (fs::exists(name)) return name;
  const fs::path p = fixture_dir() / name;
  if (fs::exists(p)) return p;
  throw ConfigError("cannot find '" + name + "' (fixture directory " + fixture_dir().string() + ")");
}

namespace {

std::ifstream open(const std::string& name) {
  const fs::path p = resolve_fixture(name);
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open " + p.string());
  return in;
}

std::size_t parse_rank(const std::string& text, const std::string& group) {
  std::size_t used = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || n == 0)
    throw ParseError("bad rank in group spec '" + group + "'");
  return n;
}

}  // namespace

const NormalFormOracle& GroupContext::require_oracle() const {
  if (!oracle) throw ConfigError("group '" + group_text + "' has no normal form oracle");
  return *oracle;
}

const SubgroupSpec& GroupContext::require_subgroup() const {
  if (!subgroup) throw ConfigError("generators of H over X are unknown for '" + group_text + "'");
  return *subgroup;
}

const GwpPda& GroupContext::require_pda() const {
  if (!pda) throw ConfigError("the pushdown automaton needs a free or virtually free group");
  return *pda;
}

GroupContext load_group(const GroupOptions& options) {
  GroupContext ctx;
  std::string group = options.vf.empty() ? options.group : "vf:" + options.vf;
  ctx.group_text = group;
  const auto colon = group.find(':');
  if (colon == std::string::npos) throw ParseError("group spec '" + group + "' lacks ':'");
  const std::string kind = group.substr(0, colon);
  const std::string arg = group.substr(colon + 1);
  const std::string sub_text = options.sub.value_or("");

  if (kind == "free") {
    ctx.alphabet = Alphabet::letters(parse_rank(arg, group));
    ctx.oracle = make_oracle(FreeGroupData{ctx.alphabet});
    std::shared_ptr<const CoreMembership> m;
    if (!options.core.empty()) {
      if (options.sub) throw ConfigError("give either --sub or --core, not both");
      auto in = open(options.core);
      m = std::make_shared<const CoreMembership>(read_graph(in, ctx.alphabet));
      ctx.subgroup_text = "core:" + options.core;
    } else {
      ctx.subgroup = SubgroupSpec::parse(ctx.alphabet, sub_text);
      m = std::make_shared<const CoreMembership>(*ctx.subgroup, ctx.alphabet);
    }
    ctx.core = m->core();
    ctx.pda = std::make_shared<const GwpPda>(*ctx.core);
    ctx.member = std::move(m);
  } else if (!options.core.empty()) {
    throw ConfigError("--core only applies to free groups");
  } else if (kind == "abelian") {
    auto z = std::make_shared<const FreeAbelianOracle>(parse_rank(arg, group));
    ctx.alphabet = z->alphabet();
    ctx.oracle = z;
    ctx.subgroup = SubgroupSpec::parse(ctx.alphabet, sub_text);
    ctx.member = std::make_shared<const LatticeMembership>(z, *ctx.subgroup);
  } else if (kind == "vf") {
    auto in = open(arg);
    VirtuallyFreeSpec spec = read_vf_spec(in);
    if (options.sub) spec.subgroup = SubgroupSpec::parse(spec.free, *options.sub);
    auto shared = std::make_shared<const VirtuallyFreeSpec>(std::move(spec));
    ctx.vf = shared;
    ctx.alphabet = shared->ambient;
    if (shared->has_normal_form_data()) {
      ctx.oracle = make_oracle(CosetTableData{shared});
      ctx.subgroup = ambient_subgroup(*shared);
    }
    auto m = std::make_shared<const VirtuallyFreeMembership>(shared);
    ctx.decider = std::shared_ptr<const VirtuallyFreeDecider>(m, &m->decider());
    ctx.pda = std::shared_ptr<const GwpPda>(m, &m->decider().pda());
    ctx.member = std::move(m);
  } else {
    throw ParseError("unknown group kind '" + kind + "' (free, abelian or vf)");
  }
  if (ctx.subgroup_text.empty())
    ctx.subgroup_text = ctx.vf ? "K=" + format_subgroup(ctx.vf->free, ctx.vf->subgroup)
                               : format_subgroup(ctx.alphabet, *ctx.subgroup);
  return ctx;
}

Eda load_eda(const GroupContext& ctx, const std::string& rules, std::size_t k, std::size_t R) {
  if (!rules.empty()) {
    auto in = open(rules);
    return read_rules(in, ctx.alphabet);
  }
  return quasiconvex_eda(*ctx.member, ctx.require_oracle(), k, R);
}

}  // namespace gwpcli
