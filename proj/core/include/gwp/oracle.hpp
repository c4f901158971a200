#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "gwp/alphabet.hpp"

namespace gwp {

struct VirtuallyFreeSpec;

/// Canonical forms for the elements of a group.  Two words get the same
/// canonical word iff they represent the same element, and the identity is
/// always the empty word.
class NormalFormOracle {
 public:
  virtual ~NormalFormOracle() = default;

  virtual Word normal_form(WordView w) const = 0;
  virtual std::string_view kind() const noexcept = 0;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  bool equal(WordView u, WordView v) const {
    return normal_form(u) == normal_form(v);
  }
  bool is_identity(WordView w) const { return normal_form(w).empty(); }

 protected:
  explicit NormalFormOracle(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

 private:
  Alphabet alphabet_;
};

/// Free reduction.  Over an alphabet with self-inverse generators this is
/// the normal form of the free product of copies of Z and Z/2.
class FreeOracle final : public NormalFormOracle {
 public:
  explicit FreeOracle(Alphabet alphabet) : NormalFormOracle(std::move(alphabet)) {}
  Word normal_form(WordView w) const override;
  std::string_view kind() const noexcept override { return "free"; }
};

/// Z^n on the letters alphabet: sorted exponent normal form, e.g. a^2 b^-1
/// is written `a a b^-1`.
class FreeAbelianOracle final : public NormalFormOracle {
 public:
  explicit FreeAbelianOracle(std::size_t rank);
  Word normal_form(WordView w) const override;
  std::string_view kind() const noexcept override { return "free-abelian"; }

  std::vector<std::int64_t> exponents(WordView w) const;
  Word from_exponents(const std::vector<std::int64_t>& e) const;
  std::size_t rank() const noexcept { return alphabet().generator_count(); }
};

struct FreeGroupData {
  Alphabet alphabet;
};
struct FreeAbelianData {
  std::size_t rank = 0;
};
struct CosetTableData {
  std::shared_ptr<const VirtuallyFreeSpec> spec;
};

using OracleConfig = std::variant<FreeGroupData, FreeAbelianData, CosetTableData>;

/// Builds the oracle for `free`, `free-abelian` or `coset-table-over-free`
/// data.  Throws ConfigError on malformed data.
std::shared_ptr<const NormalFormOracle> make_oracle(const OracleConfig& config);

}  // namespace gwp
