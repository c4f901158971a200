#include "gwp/oracle.hpp"

#include <cstdlib>

#include "gwp/error.hpp"
#include "gwp/virtually_free.hpp"

namespace gwp {

Word FreeOracle::normal_form(WordView w) const {
  return free_reduce(alphabet(), w);
}

FreeAbelianOracle::FreeAbelianOracle(std::size_t rank)
    : NormalFormOracle(rank == 0 || rank > 26
                           ? throw ConfigError("free-abelian rank must be 1..26")
                           : Alphabet::letters(rank)) {}

std::vector<std::int64_t> FreeAbelianOracle::exponents(WordView w) const {
  std::vector<std::int64_t> e(rank(), 0);
  for (Symbol s : w) {
    const std::size_t g = alphabet().generator_index(s);
    e[g] += alphabet().is_inverted(s) ? -1 : 1;
  }
  return e;
}

Word FreeAbelianOracle::from_exponents(const std::vector<std::int64_t>& e) const {
  Word out;
  for (std::size_t g = 0; g < e.size(); ++g) {
    const Symbol pos = alphabet().generator(g);
    const Symbol s = e[g] < 0 ? alphabet().inverse(pos) : pos;
    out.insert(out.end(), static_cast<std::size_t>(std::llabs(e[g])), s);
  }
  return out;
}

Word FreeAbelianOracle::normal_form(WordView w) const {
  return from_exponents(exponents(w));
}

std::shared_ptr<const NormalFormOracle> make_oracle(const OracleConfig& config) {
  struct Visitor {
    std::shared_ptr<const NormalFormOracle> operator()(const FreeGroupData& d) const {
      if (d.alphabet.size() == 0)
        throw ConfigError("free oracle needs a nonempty alphabet");
      return std::make_shared<FreeOracle>(d.alphabet);
    }
    std::shared_ptr<const NormalFormOracle> operator()(const FreeAbelianData& d) const {
      return std::make_shared<FreeAbelianOracle>(d.rank);
    }
    std::shared_ptr<const NormalFormOracle> operator()(const CosetTableData& d) const {
      if (!d.spec) throw ConfigError("coset-table oracle needs a virtually free spec");
      return std::make_shared<CosetTableOracle>(d.spec);
    }
  };
  return std::visit(Visitor{}, config);
}

}  // namespace gwp
