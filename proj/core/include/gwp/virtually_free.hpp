#pragma once

#include <iosfwd>
#include <memory>
#include <string_view>
#include <vector>

#include "gwp/alphabet.hpp"
#include "gwp/membership.hpp"
#include "gwp/oracle.hpp"
#include "gwp/pda.hpp"
#include "gwp/schreier.hpp"
#include "gwp/xgraph.hpp"

namespace gwp {

/// A virtually free group G = <X> with free subgroup F = <Y> of finite
/// index, a subgroup H described by K = F n H (generators over Y) and the
/// marked cosets T' (those t_i lying in H).
///
/// `generator_words` (one X-word per declared Y generator) and
/// `transversal_words` (one X-word per t_i) are only needed for the
/// coset-table normal form; they may be left empty otherwise.
struct VirtuallyFreeSpec {
  Alphabet ambient;
  Alphabet free;
  SchreierRewriter rewriter;
  std::vector<Word> generator_words;
  std::vector<Word> transversal_words;
  SubgroupSpec subgroup;

  bool has_normal_form_data() const noexcept {
    return generator_words.size() == free.generator_count() &&
           transversal_words.size() == rewriter.transversal_size();
  }
};

/// Virtually-free spec file, one directive per line:
///
///     generators: x y
///     self-inverse: x y
///     free-generators: g
///     express g : x y          (optional, X-word for a Y generator)
///     transversal: 2
///     rep 2 : x                (optional, X-word for t_2; t_1 is empty)
///     marked: 1
///     act 1 x 2                (t_1 x lies in F t_2)
///     sch 1 x :                (u(1,x) over Y, here empty)
///     subgroup:                (remaining lines: generators of K over Y)
///     g
///
/// Entries for x^-1 that are not given are derived from those for x.
VirtuallyFreeSpec read_vf_spec(std::istream& in);
void write_vf_spec(std::ostream& out, const VirtuallyFreeSpec& spec);

/// Z/2 * Z/2 = <x, y> with F = <g>, g = xy, T = {1, x}.  `k_generators`
/// lists K over {g, g^-1}; `marked` uses 0-based coset indices.
VirtuallyFreeSpec infinite_dihedral_spec(std::string_view k_generators,
                                         std::vector<CosetIndex> marked = {0});

/// A free group viewed as virtually free with F = G and one coset.
VirtuallyFreeSpec free_group_spec(const Alphabet& alphabet, SubgroupSpec subgroup);

/// The X-word for a word over Y, letter by letter through `generator_words`.
Word express_free_word(const VirtuallyFreeSpec& spec, WordView v);

/// Generators of H over X: those of K written over X, plus t_i for every
/// marked coset other than the first.
SubgroupSpec ambient_subgroup(const VirtuallyFreeSpec& spec);

struct VfRun {
  bool member = false;
  CosetIndex coset = 0;
  PdaConfig final;
  std::size_t letters = 0;
  std::size_t pda_steps = 0;
};

/// Streams the Schreier transducer into the pushdown automaton in one
/// left-to-right pass: w in H iff the final coset is marked and the automaton
/// accepts v.
class VirtuallyFreeDecider {
 public:
  explicit VirtuallyFreeDecider(std::shared_ptr<const VirtuallyFreeSpec> spec);

  bool contains(WordView w) const { return run(w).member; }
  VfRun run(WordView w, std::vector<PdaStep>* trace = nullptr) const;

  const VirtuallyFreeSpec& spec() const noexcept { return *spec_; }
  const XGraph& core() const noexcept { return core_; }
  const GwpPda& pda() const noexcept { return pda_; }

 private:
  std::shared_ptr<const VirtuallyFreeSpec> spec_;
  XGraph core_;
  GwpPda pda_;
};

bool gwp_virtually_free(const SchreierRewriter& rewriter, const GwpPda& pda, WordView w);

class VirtuallyFreeMembership final : public SubgroupMembership {
 public:
  explicit VirtuallyFreeMembership(std::shared_ptr<const VirtuallyFreeSpec> spec)
      : decider_(std::move(spec)) {}
  const Alphabet& alphabet() const noexcept override { return decider_.spec().ambient; }
  bool contains(WordView w) const override { return decider_.contains(w); }
  const VirtuallyFreeDecider& decider() const noexcept { return decider_; }

 private:
  VirtuallyFreeDecider decider_;
};

/// Normal form through the transversal: w = v t with v freely reduced over
/// Y, written back over X and freely reduced there.
class CosetTableOracle final : public NormalFormOracle {
 public:
  explicit CosetTableOracle(std::shared_ptr<const VirtuallyFreeSpec> spec);
  Word normal_form(WordView w) const override;
  std::string_view kind() const noexcept override { return "coset-table-over-free"; }

 private:
  std::shared_ptr<const VirtuallyFreeSpec> spec_;
};

}  // namespace gwp
