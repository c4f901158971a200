#include "gwp/virtually_free.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "gwp/error.hpp"
#include "gwp/stallings.hpp"

namespace gwp {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

CosetIndex parse_index(const std::string& tok, std::size_t n, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || v == 0 || v > n)
    throw ParseError("line " + std::to_string(line_no) + ": bad coset index '" + tok + "'");
  return static_cast<CosetIndex>(v - 1);
}

struct Line {
  std::size_t number;
  std::string key;   // directive name
  std::string head;  // text between the directive and ':' (for express/rep/sch)
  std::string body;  // text after ':' or after the directive
};

}  // namespace

VirtuallyFreeSpec read_vf_spec(std::istream& in) {
  std::vector<Line> lines;
  std::vector<std::string> subgroup_lines;
  bool in_subgroup = false;
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string text = trim(raw);
    if (text.empty()) continue;
    if (in_subgroup) {
      subgroup_lines.push_back(text);
      continue;
    }
    auto words = tokens(text);
    std::string key = words.front();
    if (key.back() == ':') key.pop_back();
    const auto colon = text.find(':');
    Line l{number, key, {}, {}};
    if (key == "act") {
      l.body = text.substr(3);
    } else if (key == "express" || key == "rep" || key == "sch") {
      if (colon == std::string::npos)
        throw ParseError("line " + std::to_string(number) + ": '" + key + "' needs ':'");
      l.head = trim(text.substr(key.size(), colon - key.size()));
      l.body = text.substr(colon + 1);
    } else {
      if (colon == std::string::npos)
        throw ParseError("line " + std::to_string(number) + ": unknown directive '" + text + "'");
      l.body = text.substr(colon + 1);
      if (key == "subgroup") {
        in_subgroup = true;
        if (!trim(l.body).empty()) subgroup_lines.push_back(trim(l.body));
        continue;
      }
    }
    lines.push_back(std::move(l));
  }

  std::optional<std::vector<std::string>> gens;
  std::optional<std::vector<std::string>> free_gens;
  std::vector<std::string> involutions;
  std::optional<std::size_t> n;
  for (const Line& l : lines) {
    if (l.key == "generators") gens = tokens(l.body);
    else if (l.key == "self-inverse") involutions = tokens(l.body);
    else if (l.key == "free-generators") free_gens = tokens(l.body);
    else if (l.key == "transversal") {
      auto t = tokens(l.body);
      if (t.size() != 1) throw ParseError("line " + std::to_string(l.number) + ": transversal: <n>");
      n = std::stoul(t[0]);
      if (*n == 0) throw ParseError("transversal size must be positive");
    }
  }
  if (!gens) throw ParseError("vf spec lacks 'generators:'");
  if (!free_gens) throw ParseError("vf spec lacks 'free-generators:'");
  if (!n) n = 1;

  Alphabet ambient(*gens, involutions);
  Alphabet free(*free_gens);
  const std::size_t cells = *n * ambient.size();
  std::vector<std::optional<CosetIndex>> action(cells);
  std::vector<std::optional<Word>> words(cells);
  std::vector<CosetIndex> marked;
  std::vector<std::optional<Word>> gen_words(free.generator_count());
  std::vector<std::optional<Word>> reps(*n);
  bool saw_reps = false;
  bool saw_express = false;

  for (const Line& l : lines) {
    const std::string where = "line " + std::to_string(l.number) + ": ";
    if (l.key == "marked") {
      for (const auto& t : tokens(l.body)) marked.push_back(parse_index(t, *n, l.number));
    } else if (l.key == "act") {
      auto t = tokens(l.body);
      if (t.size() != 3) throw ParseError(where + "act <i> <symbol> <j>");
      const CosetIndex i = parse_index(t[0], *n, l.number);
      const Symbol x = ambient.lookup(t[1]);
      action[i * ambient.size() + index_of(x)] = parse_index(t[2], *n, l.number);
    } else if (l.key == "sch") {
      auto t = tokens(l.head);
      if (t.size() != 2) throw ParseError(where + "sch <i> <symbol> : <word>");
      const CosetIndex i = parse_index(t[0], *n, l.number);
      const Symbol x = ambient.lookup(t[1]);
      words[i * ambient.size() + index_of(x)] = parse_word(free, l.body);
    } else if (l.key == "express") {
      const Symbol y = free.lookup(l.head);
      if (free.is_inverted(y)) throw ParseError(where + "express a positive generator");
      gen_words[free.generator_index(y)] = parse_word(ambient, l.body);
      saw_express = true;
    } else if (l.key == "rep") {
      reps[parse_index(l.head, *n, l.number)] = parse_word(ambient, l.body);
      saw_reps = true;
    } else if (l.key != "generators" && l.key != "self-inverse" &&
               l.key != "free-generators" && l.key != "transversal") {
      throw ParseError(where + "unknown directive '" + l.key + "'");
    }
  }
  if (marked.empty()) marked.push_back(0);

  // Derive x^-1 entries from x entries.
  for (CosetIndex i = 0; i < *n; ++i) {
    for (std::size_t s = 0; s < ambient.size(); ++s) {
      const std::size_t c = i * ambient.size() + s;
      if (!action[c] || !words[c]) continue;
      const Symbol xi = ambient.inverse(symbol_at(s));
      const std::size_t back = *action[c] * ambient.size() + index_of(xi);
      if (!action[back]) action[back] = i;
      if (!words[back]) words[back] = invert_word(free, *words[c]);
    }
  }
  std::vector<CosetIndex> act;
  std::vector<Word> sch;
  for (std::size_t c = 0; c < cells; ++c) {
    if (!action[c] || !words[c])
      throw ConfigError("vf spec lacks act/sch for t" + std::to_string(c / ambient.size() + 1) +
                        " " + ambient.name(symbol_at(c % ambient.size())));
    act.push_back(*action[c]);
    sch.push_back(*words[c]);
  }

  std::vector<Word> generator_words;
  if (saw_express) {
    for (std::size_t g = 0; g < gen_words.size(); ++g) {
      if (!gen_words[g])
        throw ConfigError("vf spec lacks 'express' for " + free.generator_names()[g]);
      generator_words.push_back(*gen_words[g]);
    }
  }
  std::vector<Word> transversal_words;
  if (saw_reps || saw_express) {
    reps[0] = reps[0].value_or(Word{});
    for (CosetIndex i = 0; i < *n; ++i) {
      if (!reps[i]) throw ConfigError("vf spec lacks 'rep' for t" + std::to_string(i + 1));
      transversal_words.push_back(*reps[i]);
    }
  }

  std::vector<Word> k_gens;
  for (const auto& s : subgroup_lines) {
    auto parsed = SubgroupSpec::parse(free, s);
    k_gens.insert(k_gens.end(), parsed.generators().begin(), parsed.generators().end());
  }

  SchreierRewriter rw(ambient, free, *n, marked, std::move(act), std::move(sch));
  return VirtuallyFreeSpec{ambient, free, std::move(rw), std::move(generator_words),
                           std::move(transversal_words), SubgroupSpec(free, std::move(k_gens))};
}

void write_vf_spec(std::ostream& out, const VirtuallyFreeSpec& spec) {
  const Alphabet& x = spec.ambient;
  const Alphabet& y = spec.free;
  write_alphabet(out, x);
  out << "free-generators:";
  for (const auto& g : y.generator_names()) out << ' ' << g;
  out << '\n';
  for (std::size_t g = 0; g < spec.generator_words.size(); ++g)
    out << "express " << y.generator_names()[g] << " : "
        << format_word(x, spec.generator_words[g]) << '\n';
  const auto& rw = spec.rewriter;
  out << "transversal: " << rw.transversal_size() << '\n';
  for (std::size_t i = 1; i < spec.transversal_words.size(); ++i)
    out << "rep " << i + 1 << " : " << format_word(x, spec.transversal_words[i]) << '\n';
  out << "marked:";
  for (CosetIndex m : rw.marked()) out << ' ' << m + 1;
  out << '\n';
  for (CosetIndex i = 0; i < rw.transversal_size(); ++i) {
    for (std::size_t g = 0; g < x.generator_count(); ++g) {
      const Symbol s = x.generator(g);
      out << "act " << i + 1 << ' ' << x.name(s) << ' ' << rw.next(i, s) + 1 << '\n';
      const std::string u = format_word(y, rw.emission(i, s));
      out << "sch " << i + 1 << ' ' << x.name(s) << " :" << (u.empty() ? "" : " " + u) << '\n';
    }
  }
  out << "subgroup:\n";
  for (const Word& k : spec.subgroup.generators()) out << format_word(y, k) << '\n';
}

VirtuallyFreeSpec infinite_dihedral_spec(std::string_view k_generators,
                                         std::vector<CosetIndex> marked) {
  Alphabet x({"x", "y"}, {"x", "y"});
  Alphabet y({"g"});
  const Symbol sx = x.lookup("x");
  const Symbol sy = x.lookup("y");
  const Symbol g = y.lookup("g");
  const Symbol gi = y.lookup("g^-1");
  const std::size_t w = x.size();
  std::vector<CosetIndex> act(2 * w);
  std::vector<Word> sch(2 * w);
  // t1 x = t2, t1 y = g^-1 t2, t2 x = t1, t2 y = g t1
  act[0 * w + index_of(sx)] = 1;
  act[0 * w + index_of(sy)] = 1;
  act[1 * w + index_of(sx)] = 0;
  act[1 * w + index_of(sy)] = 0;
  sch[0 * w + index_of(sy)] = {gi};
  sch[1 * w + index_of(sy)] = {g};
  SchreierRewriter rw(x, y, 2, marked, std::move(act), std::move(sch));
  SubgroupSpec k = SubgroupSpec::parse(y, k_generators);
  return VirtuallyFreeSpec{x, y, std::move(rw), {Word{sx, sy}}, {Word{}, Word{sx}}, std::move(k)};
}

VirtuallyFreeSpec free_group_spec(const Alphabet& alphabet, SubgroupSpec subgroup) {
  std::vector<Word> gens;
  for (std::size_t g = 0; g < alphabet.generator_count(); ++g)
    gens.push_back({alphabet.generator(g)});
  return VirtuallyFreeSpec{alphabet, alphabet, SchreierRewriter::passthrough(alphabet),
                           std::move(gens), {Word{}}, std::move(subgroup)};
}

VirtuallyFreeDecider::VirtuallyFreeDecider(std::shared_ptr<const VirtuallyFreeSpec> spec)
    : spec_(std::move(spec)),
      core_(stallings_fold(spec_->subgroup, spec_->free)),
      pda_(core_) {}

VfRun VirtuallyFreeDecider::run(WordView w, std::vector<PdaStep>* trace) const {
  const SchreierRewriter& rw = spec_->rewriter;
  VfRun r{false, 0, pda_.start(), 0, 0};
  for (Symbol x : w) {
    if (!rw.ambient().contains(x)) throw AlphabetError("letter outside the ambient alphabet");
    for (Symbol y : rw.emission(r.coset, x)) {
      PdaStep step = pda_.step(r.final, y);
      ++r.pda_steps;
      if (trace) trace->push_back(step);
    }
    r.coset = rw.next(r.coset, x);
    ++r.letters;
  }
  r.member = rw.is_marked(r.coset) && pda_.accepting(r.final);
  return r;
}

bool gwp_virtually_free(const SchreierRewriter& rewriter, const GwpPda& pda, WordView w) {
  CosetIndex coset = 0;
  PdaConfig config = pda.start();
  for (Symbol x : w) {
    if (!rewriter.ambient().contains(x)) throw AlphabetError("letter outside the ambient alphabet");
    for (Symbol y : rewriter.emission(coset, x)) pda.step(config, y);
    coset = rewriter.next(coset, x);
  }
  return rewriter.is_marked(coset) && pda.accepting(config);
}

CosetTableOracle::CosetTableOracle(std::shared_ptr<const VirtuallyFreeSpec> spec)
    : NormalFormOracle(spec->ambient), spec_(std::move(spec)) {
  if (!spec_->has_normal_form_data())
    throw ConfigError("coset-table normal form needs 'express' and 'rep' data");
}

Word express_free_word(const VirtuallyFreeSpec& spec, WordView v) {
  if (!spec.has_normal_form_data())
    throw ConfigError("spec lacks 'express' and 'rep' data");
  Word out;
  for (Symbol y : v) {
    const Word& g = spec.generator_words[spec.free.generator_index(y)];
    if (spec.free.is_inverted(y)) {
      const Word gi = invert_word(spec.ambient, g);
      out.insert(out.end(), gi.begin(), gi.end());
    } else {
      out.insert(out.end(), g.begin(), g.end());
    }
  }
  return out;
}

SubgroupSpec ambient_subgroup(const VirtuallyFreeSpec& spec) {
  std::vector<Word> gens;
  for (const Word& k : spec.subgroup.generators()) gens.push_back(express_free_word(spec, k));
  for (CosetIndex m : spec.rewriter.marked())
    if (m != 0) gens.push_back(spec.transversal_words[m]);
  std::vector<Word> kept;
  for (Word& g : gens)
    if (!free_reduce(spec.ambient, g).empty()) kept.push_back(std::move(g));
  return SubgroupSpec(spec.ambient, std::move(kept));
}

Word CosetTableOracle::normal_form(WordView w) const {
  const RewriteResult r = spec_->rewriter.rewrite(w);
  Word out = express_free_word(*spec_, free_reduce(spec_->free, r.free_word));
  const Word& t = spec_->transversal_words[r.coset];
  out.insert(out.end(), t.begin(), t.end());
  return free_reduce(spec_->ambient, out);
}

}  // namespace gwp
