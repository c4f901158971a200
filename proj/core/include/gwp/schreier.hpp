#pragma once

#include <cstdint>
#include <vector>

#include "gwp/alphabet.hpp"

namespace gwp {

/// Index into a right transversal {t_1, ..., t_n} of F in G.  Index 0 is the
/// identity coset, written t_1 in files and reports.
using CosetIndex = std::uint32_t;

struct RewriteResult {
  Word free_word;  // v over Y, not freely reduced
  CosetIndex coset = 0;
};

/// Transducer X* -> Y* x T given by t_i x = u(i,x) t_j.  The coset action
/// and the Schreier words are user data; construction checks that they are
/// compatible with inversion.
class SchreierRewriter {
 public:
  /// `action` and `words` are indexed by i * |X| + symbol.
  SchreierRewriter(Alphabet ambient, Alphabet free_alphabet, std::size_t transversal_size,
                   const std::vector<CosetIndex>& marked, std::vector<CosetIndex> action,
                   std::vector<Word> words);

  /// G = F, Y = X, one coset, u(1,x) = x.
  static SchreierRewriter passthrough(const Alphabet& alphabet);

  const Alphabet& ambient() const noexcept { return ambient_; }
  const Alphabet& free_alphabet() const noexcept { return free_; }
  std::size_t transversal_size() const noexcept { return n_; }
  bool is_marked(CosetIndex i) const { return marked_.at(i); }
  std::vector<CosetIndex> marked() const;

  CosetIndex next(CosetIndex i, Symbol x) const { return action_[slot(i, x)]; }
  const Word& emission(CosetIndex i, Symbol x) const { return words_[slot(i, x)]; }

  /// Left-to-right scan from the identity coset.
  RewriteResult rewrite(WordView w) const;

 private:
  std::size_t slot(CosetIndex i, Symbol x) const {
    return static_cast<std::size_t>(i) * ambient_.size() + index_of(x);
  }

  Alphabet ambient_;
  Alphabet free_;
  std::size_t n_ = 1;
  std::vector<bool> marked_;
  std::vector<CosetIndex> action_;
  std::vector<Word> words_;
};

}  // namespace gwp
