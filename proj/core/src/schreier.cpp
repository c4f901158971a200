#include "gwp/schreier.hpp"

#include "gwp/error.hpp"

namespace gwp {

SchreierRewriter::SchreierRewriter(Alphabet ambient, Alphabet free_alphabet,
                                   std::size_t transversal_size,
                                   const std::vector<CosetIndex>& marked,
                                   std::vector<CosetIndex> action, std::vector<Word> words)
    : ambient_(std::move(ambient)),
      free_(std::move(free_alphabet)),
      n_(transversal_size),
      marked_(transversal_size, false),
      action_(std::move(action)),
      words_(std::move(words)) {
  if (n_ == 0) throw ConfigError("transversal must contain at least the identity");
  const std::size_t cells = n_ * ambient_.size();
  if (action_.size() != cells || words_.size() != cells)
    throw ConfigError("coset action and Schreier words must cover every (coset, symbol)");
  for (CosetIndex m : marked) {
    if (m >= n_) throw ConfigError("marked coset out of range");
    marked_[m] = true;
  }
  if (!marked_[0]) throw ConfigError("the identity coset must be marked");

  for (CosetIndex i = 0; i < n_; ++i) {
    for (std::size_t s = 0; s < ambient_.size(); ++s) {
      const Symbol x = symbol_at(s);
      const CosetIndex j = next(i, x);
      if (j >= n_) throw ConfigError("coset action leaves the transversal");
      const Symbol xi = ambient_.inverse(x);
      if (next(j, xi) != i)
        throw ConfigError("coset action is not inverse-compatible at t" +
                          std::to_string(i + 1) + " " + ambient_.name(x));
      for (Symbol y : emission(i, x))
        if (!free_.contains(y)) throw ConfigError("Schreier word uses a symbol outside Y");
      const Word loop = free_reduce(free_, concat(emission(i, x), emission(j, xi)));
      if (!loop.empty())
        throw ConfigError("Schreier words u(t" + std::to_string(i + 1) + "," +
                          ambient_.name(x) + ") and u(t" + std::to_string(j + 1) + "," +
                          ambient_.name(xi) + ") are not mutually inverse");
    }
  }
}

SchreierRewriter SchreierRewriter::passthrough(const Alphabet& alphabet) {
  std::vector<CosetIndex> action(alphabet.size(), 0);
  std::vector<Word> words;
  for (std::size_t s = 0; s < alphabet.size(); ++s) words.push_back({symbol_at(s)});
  return SchreierRewriter(alphabet, alphabet, 1, {0}, std::move(action), std::move(words));
}

std::vector<CosetIndex> SchreierRewriter::marked() const {
  std::vector<CosetIndex> out;
  for (CosetIndex i = 0; i < n_; ++i)
    if (marked_[i]) out.push_back(i);
  return out;
}

RewriteResult SchreierRewriter::rewrite(WordView w) const {
  RewriteResult r;
  for (Symbol x : w) {
    if (!ambient_.contains(x)) throw AlphabetError("letter outside the ambient alphabet");
    const Word& u = emission(r.coset, x);
    r.free_word.insert(r.free_word.end(), u.begin(), u.end());
    r.coset = next(r.coset, x);
  }
  return r;
}

}  // namespace gwp
