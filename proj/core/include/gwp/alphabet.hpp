#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gwp {

/// A letter of an inverse-closed generating set.  Symbols are numbered in
/// declaration order, which is also the order used for every shortlex choice.
enum class Symbol : std::uint16_t {};

constexpr std::size_t index_of(Symbol s) noexcept {
  return static_cast<std::size_t>(s);
}
constexpr Symbol symbol_at(std::size_t i) noexcept {
  return static_cast<Symbol>(i);
}

using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

struct WordHash {
  std::size_t operator()(WordView w) const noexcept;
  std::size_t operator()(const Word& w) const noexcept {
    return (*this)(WordView(w));
  }
};

/// Inverse-closed generating set.
///
/// Each declared generator `g` contributes the symbol `g` and, unless it is
/// declared self-inverse, a second symbol `g^-1` placed directly after it.
/// So generators `a b` give the symbol order `a, a^-1, b, b^-1`.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> generators,
                    const std::vector<std::string>& self_inverse = {});

  /// Generators `a, b, c, ...` with distinct inverses.
  static Alphabet letters(std::size_t rank);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  bool contains(Symbol s) const noexcept { return index_of(s) < size(); }

  /// The positive symbol of the i-th declared generator.
  Symbol generator(std::size_t i) const { return generators_.at(i); }
  /// Index of the declared generator that `s` or its inverse names.
  std::size_t generator_index(Symbol s) const { return owner_.at(index_of(s)); }
  /// True for `g^-1` symbols; false for positive and self-inverse symbols.
  bool is_inverted(Symbol s) const { return generator(generator_index(s)) != s; }

  Symbol inverse(Symbol s) const { return inverse_[checked(s)]; }
  bool is_self_inverse(Symbol s) const { return inverse(s) == s; }
  const std::string& name(Symbol s) const { return names_[checked(s)]; }

  std::optional<Symbol> find(std::string_view token) const;
  /// Throws AlphabetError for unknown tokens.
  Symbol lookup(std::string_view token) const;

  const std::vector<std::string>& generator_names() const noexcept {
    return generator_names_;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.inverse_ == b.inverse_;
  }

 private:
  std::size_t checked(Symbol s) const;

  std::vector<std::string> generator_names_;
  std::vector<std::string> names_;
  std::vector<Symbol> inverse_;
  std::vector<Symbol> generators_;
  std::vector<std::size_t> owner_;
  std::unordered_map<std::string, Symbol> by_name_;
};

/// Parses whitespace separated tokens `g` or `g^-1`.  Blank text is the
/// empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, WordView w);

/// Alphabet file: a line `generators: a b ...` and optionally a line
/// `self-inverse: x ...`.  `#` starts a comment.
Alphabet read_alphabet(std::istream& in);
void write_alphabet(std::ostream& out, const Alphabet& alphabet);

Word free_reduce(const Alphabet& alphabet, WordView w);
bool is_freely_reduced(const Alphabet& alphabet, WordView w);
Word invert_word(const Alphabet& alphabet, WordView w);
Word concat(WordView u, WordView v);

/// Length first, then lexicographic in declaration order.
bool shortlex_less(WordView u, WordView v) noexcept;

/// Generators of a subgroup as words over the ambient alphabet.  Every
/// generator is stored freely reduced; a generator that reduces to the empty
/// word is rejected, so the trivial subgroup is the one with no generators.
class SubgroupSpec {
 public:
  SubgroupSpec() = default;
  SubgroupSpec(const Alphabet& alphabet, std::vector<Word> generators);

  static SubgroupSpec trivial() { return {}; }
  /// Comma or semicolon separated list of words, e.g. `"a a, b"`.
  static SubgroupSpec parse(const Alphabet& alphabet, std::string_view text);

  const std::vector<Word>& generators() const noexcept { return generators_; }
  bool is_trivial() const noexcept { return generators_.empty(); }

 private:
  std::vector<Word> generators_;
};

std::string format_subgroup(const Alphabet& alphabet, const SubgroupSpec& sub);

}  // namespace gwp
