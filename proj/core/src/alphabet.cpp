#include "gwp/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "gwp/error.hpp"

namespace gwp {

namespace {

constexpr std::string_view kInverseSuffix = "^-1";

bool valid_name(std::string_view name) {
  if (name.empty() || name == "H") return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '^' || c == ',' || c == ';' || c == '#' || c == ':' ||
           std::isspace(static_cast<unsigned char>(c));
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

std::size_t WordHash::operator()(WordView w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    h ^= index_of(s) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

Alphabet::Alphabet(std::vector<std::string> generators,
                   const std::vector<std::string>& self_inverse)
    : generator_names_(std::move(generators)) {
  for (const auto& s : self_inverse) {
    if (std::find(generator_names_.begin(), generator_names_.end(), s) ==
        generator_names_.end())
      throw AlphabetError("self-inverse symbol '" + s +
                          "' is not a declared generator");
  }
  for (std::size_t g = 0; g < generator_names_.size(); ++g) {
    const std::string& name = generator_names_[g];
    if (!valid_name(name))
      throw AlphabetError("invalid generator name '" + name + "'");
    if (by_name_.count(name))
      throw AlphabetError("duplicate generator name '" + name + "'");

    const bool involution =
        std::find(self_inverse.begin(), self_inverse.end(), name) !=
        self_inverse.end();
    const Symbol pos = symbol_at(names_.size());
    generators_.push_back(pos);
    names_.push_back(name);
    owner_.push_back(g);
    by_name_.emplace(name, pos);
    if (involution) {
      inverse_.push_back(pos);
      by_name_.emplace(name + std::string(kInverseSuffix), pos);
    } else {
      const Symbol neg = symbol_at(names_.size());
      inverse_.push_back(neg);
      inverse_.push_back(pos);
      names_.push_back(name + std::string(kInverseSuffix));
      owner_.push_back(g);
      by_name_.emplace(names_.back(), neg);
    }
  }
  if (names_.size() > 0xffff) throw AlphabetError("alphabet too large");
}

Alphabet Alphabet::letters(std::size_t rank) {
  if (rank == 0 || rank > 26)
    throw AlphabetError("letter alphabets support rank 1..26");
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < rank; ++i)
    gens.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(gens));
}

std::size_t Alphabet::checked(Symbol s) const {
  if (!contains(s))
    throw AlphabetError("symbol #" + std::to_string(index_of(s)) +
                        " is not in the alphabet");
  return index_of(s);
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = by_name_.find(std::string(token));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::lookup(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw AlphabetError("unknown symbol '" + std::string(token) + "'");
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  for (const auto& tok : split_ws(text)) w.push_back(alphabet.lookup(tok));
  return w;
}

std::string format_word(const Alphabet& alphabet, WordView w) {
  std::string out;
  for (Symbol s : w) {
    if (!out.empty()) out.push_back(' ');
    out += alphabet.name(s);
  }
  return out;
}

Alphabet read_alphabet(std::istream& in) {
  std::optional<std::vector<std::string>> gens;
  std::vector<std::string> involutions;
  for (std::string line; std::getline(in, line);) {
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos)
      v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    auto colon = v.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("alphabet line without ':': " + line);
    auto key = trim(v.substr(0, colon));
    auto rest = v.substr(colon + 1);
    if (key == "generators") {
      gens = split_ws(rest);
    } else if (key == "self-inverse") {
      for (auto& s : split_ws(rest)) involutions.push_back(std::move(s));
    } else {
      throw ParseError("unknown alphabet key '" + std::string(key) + "'");
    }
  }
  if (!gens) throw ParseError("alphabet file lacks a 'generators:' line");
  return Alphabet(std::move(*gens), involutions);
}

void write_alphabet(std::ostream& out, const Alphabet& alphabet) {
  out << "generators:";
  for (const auto& g : alphabet.generator_names()) out << ' ' << g;
  out << '\n';
  std::string inv;
  for (std::size_t i = 0; i < alphabet.generator_count(); ++i) {
    Symbol s = alphabet.generator(i);
    if (alphabet.is_self_inverse(s)) inv += ' ' + alphabet.name(s);
  }
  if (!inv.empty()) out << "self-inverse:" << inv << '\n';
}

Word free_reduce(const Alphabet& alphabet, WordView w) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) {
    const Symbol inv = alphabet.inverse(s);
    if (!out.empty() && out.back() == inv)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

bool is_freely_reduced(const Alphabet& alphabet, WordView w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Symbol inv = alphabet.inverse(w[i]);
    if (i + 1 < w.size() && w[i + 1] == inv) return false;
  }
  return true;
}

Word invert_word(const Alphabet& alphabet, WordView w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(alphabet.inverse(*it));
  return out;
}

Word concat(WordView u, WordView v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool shortlex_less(WordView u, WordView v) noexcept {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

SubgroupSpec::SubgroupSpec(const Alphabet& alphabet, std::vector<Word> generators) {
  generators_.reserve(generators.size());
  for (const auto& g : generators) {
    Word r = free_reduce(alphabet, g);
    if (r.empty())
      throw ConfigError("subgroup generator '" + format_word(alphabet, g) +
                        "' freely reduces to the empty word");
    generators_.push_back(std::move(r));
  }
}

SubgroupSpec SubgroupSpec::parse(const Alphabet& alphabet, std::string_view text) {
  std::vector<Word> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(",;", start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = trim(text.substr(start, end - start));
    if (!piece.empty()) gens.push_back(parse_word(alphabet, piece));
    start = end + 1;
  }
  return SubgroupSpec(alphabet, std::move(gens));
}

std::string format_subgroup(const Alphabet& alphabet, const SubgroupSpec& sub) {
  std::string out = "<";
  for (std::size_t i = 0; i < sub.generators().size(); ++i) {
    if (i) out += ", ";
    out += format_word(alphabet, sub.generators()[i]);
  }
  return out + ">";
}

}  // namespace gwp
