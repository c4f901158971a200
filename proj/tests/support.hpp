#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gwp/alphabet.hpp"
#include "gwp/oracle.hpp"
#include "gwp/virtually_free.hpp"

namespace testing {

using gwp::Alphabet;
using gwp::Symbol;
using gwp::Word;

inline Alphabet f2() { return Alphabet::letters(2); }
inline Alphabet dihedral() { return Alphabet({"x", "y"}, {"x", "y"}); }

inline Word w(const Alphabet& a, const std::string& text) { return gwp::parse_word(a, text); }
inline std::string s(const Alphabet& a, const Word& word) { return gwp::format_word(a, word); }

/// Removes the leftmost cancelling pair until none is left.
inline Word naive_reduce(const Alphabet& a, Word u) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (a.inverse(u[i]) == u[i + 1]) {
        u.erase(u.begin() + static_cast<std::ptrdiff_t>(i), u.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        again = true;
        break;
      }
    }
  }
  return u;
}

/// Every word of length exactly n, in lexicographic symbol order.
inline std::vector<Word> words_of_length(const Alphabet& a, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const Word& u : out)
      for (std::size_t sy = 0; sy < a.size(); ++sy) {
        Word v = u;
        v.push_back(gwp::symbol_at(sy));
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> words_up_to(const Alphabet& a, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_length(a, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline Word random_word(const Alphabet& a, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(gwp::symbol_at(pick(rng)));
  return out;
}

inline std::shared_ptr<const gwp::VirtuallyFreeSpec> dihedral_spec(const std::string& k) {
  return std::make_shared<const gwp::VirtuallyFreeSpec>(gwp::infinite_dihedral_spec(k));
}

}  // namespace testing
