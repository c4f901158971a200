#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gwp/alphabet.hpp"
#include "gwp/oracle.hpp"

namespace gwp {

/// Decides membership of words in a fixed subgroup H.  Coset equality
/// Hu = Hv is tested as u v^-1 in H.
class SubgroupMembership {
 public:
  virtual ~SubgroupMembership() = default;

  virtual const Alphabet& alphabet() const noexcept = 0;
  virtual bool contains(WordView w) const = 0;

  /// A word that is equal for u and v iff Hu = Hv, when the implementation
  /// can produce one cheaply.
  virtual std::optional<Word> coset_key(WordView) const { return std::nullopt; }

  bool same_coset(WordView u, WordView v) const;
};

/// H = {1}; the coset key is the element's normal form.
class TrivialSubgroup final : public SubgroupMembership {
 public:
  explicit TrivialSubgroup(std::shared_ptr<const NormalFormOracle> oracle)
      : oracle_(std::move(oracle)) {}
  const Alphabet& alphabet() const noexcept override { return oracle_->alphabet(); }
  bool contains(WordView w) const override { return oracle_->is_identity(w); }
  std::optional<Word> coset_key(WordView w) const override {
    return oracle_->normal_form(w);
  }

 private:
  std::shared_ptr<const NormalFormOracle> oracle_;
};

/// H = G.
class WholeGroup final : public SubgroupMembership {
 public:
  explicit WholeGroup(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  const Alphabet& alphabet() const noexcept override { return alphabet_; }
  bool contains(WordView) const override { return true; }
  std::optional<Word> coset_key(WordView) const override { return Word{}; }

 private:
  Alphabet alphabet_;
};

/// Subgroups of Z^n.  The generators' exponent vectors are brought to
/// echelon form over the integers; reducing a vector against it gives a
/// canonical coset representative.
class LatticeMembership final : public SubgroupMembership {
 public:
  LatticeMembership(std::shared_ptr<const FreeAbelianOracle> oracle,
                    const SubgroupSpec& sub);

  const Alphabet& alphabet() const noexcept override { return oracle_->alphabet(); }
  bool contains(WordView w) const override;
  std::optional<Word> coset_key(WordView w) const override;

  /// Echelon basis rows, pivots strictly to the right and positive.
  const std::vector<std::vector<std::int64_t>>& basis() const noexcept {
    return rows_;
  }

 private:
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;

  std::shared_ptr<const FreeAbelianOracle> oracle_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gwp
