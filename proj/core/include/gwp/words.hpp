#pragma once

#include <cstddef>

#include "gwp/alphabet.hpp"

namespace gwp {

/// Depth-first walk over all words of length <= max_length in lexicographic
/// symbol order, starting with the empty word.  `visit(word)` returns
/// whether to descend below `word`.
template <class Visit>
void walk_words(const Alphabet& alphabet, std::size_t max_length, Visit&& visit) {
  Word w;
  auto rec = [&](auto& self) -> void {
    if (!visit(static_cast<const Word&>(w)) || w.size() == max_length) return;
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
      w.push_back(symbol_at(s));
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

/// Number of words of length exactly n over an alphabet of `size` symbols.
inline std::size_t word_count(std::size_t size, std::size_t n) {
  std::size_t c = 1;
  while (n--) c *= size;
  return c;
}

}  // namespace gwp
