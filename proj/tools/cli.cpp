#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <random>

#include "context.hpp"
#include "gwp/balls.hpp"
#include "gwp/bruteforce.hpp"
#include "gwp/eda_build.hpp"
#include "gwp/eda_verify.hpp"
#include "gwp/error.hpp"
#include "gwp/parallel.hpp"
#include "gwp/stallings.hpp"
#include "gwp/words.hpp"
#include "report.hpp"

namespace gwpcli {

namespace {

using namespace gwp;
using Clock = std::chrono::steady_clock;

constexpr int kMember = 0;
constexpr int kNonMember = 1;
constexpr int kError = 2;

struct Globals {
  bool pretty = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  Reporter report;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const std::uint64_t num = std::stoull(text.substr(0, slash), &used);
    if (slash == std::string::npos) {
      if (used == text.size()) return {num, 1};
    } else {
      const std::string d = text.substr(slash + 1);
      std::size_t dused = 0;
      const std::uint64_t den = std::stoull(d, &dused);
      if (used == slash && dused == d.size() && den > 0) return {num, den};
    }
  } catch (const std::exception&) {
  }
  throw ParseError("bad ratio '" + text + "' (expected p or p/q)");
}

std::string format_fraction(const Fraction& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

/// Runs `write` against --out when given, else standard output.
void write_to(const std::string& path, std::ostream& out,
              const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ConfigError("cannot write " + path);
  write(file);
}

void add_group_options(CLI::App* app, GroupOptions& g) {
  app->add_option("--group", g.group, "free:N, abelian:N or vf:FILE")->capture_default_str();
  app->add_option("--vf", g.vf, "virtually free spec file (same as --group vf:FILE)");
  app->add_option("--sub", g.sub,
                  "subgroup generators, comma separated (over Y for vf groups)");
  app->add_option("--core", g.core, "free groups: Stallings core dump instead of --sub");
}

/// Keeps the shortlex-least witness seen so far.
void keep_least(std::optional<Word>& best, const Word& w) {
  if (!best || shortlex_less(w, *best)) best = w;
}

/// Calls visit(word) for every word of length <= max_length, split into one
/// task per first letter.  `visit(slot, word)` receives the task index so
/// callers can keep per-task accumulators.
template <class Visit>
void each_word_parallel(const Alphabet& a, std::size_t max_length, unsigned jobs, Visit&& visit) {
  const std::size_t n = a.size();
  parallel_for(n + 1, jobs, [&](std::size_t slot) {
    if (slot == n) {
      visit(slot, Word{});
      return;
    }
    if (max_length == 0) return;
    Word w{symbol_at(slot)};
    auto rec = [&](auto& self) -> void {
      visit(slot, static_cast<const Word&>(w));
      if (w.size() == max_length) return;
      for (std::size_t s = 0; s < n; ++s) {
        w.push_back(symbol_at(s));
        self(self);
        w.pop_back();
      }
    };
    rec(rec);
  });
}

// ---------------------------------------------------------------- query

struct QueryOptions {
  GroupOptions group;
  std::string decider = "pda";
  std::vector<std::string> word;
  std::string rules;
  std::size_t k = kDefaultDehnLength;
  std::size_t R = 6;
  std::optional<std::size_t> radius;
};

int cmd_query(const QueryOptions& o, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const Word w = parse_word(ctx.alphabet, join(o.word));
  const auto t0 = Clock::now();
  Record r;
  r.add("command", "query")
      .add("group", ctx.group_text)
      .add("subgroup", ctx.subgroup_text)
      .add("decider", o.decider)
      .word("word", ctx.alphabet, w);
  bool member = false;
  if (o.decider == "pda") {
    if (ctx.decider) {
      const VfRun run = ctx.decider->run(w);
      member = run.member;
      r.add("letters", run.letters).add("pda_steps", run.pda_steps).add("coset", run.coset + 1);
    } else {
      const PdaRun run = pda_run(ctx.require_pda(), w);
      member = run.accepted;
      r.add("letters", w.size()).add("pda_steps", run.steps);
    }
  } else if (o.decider == "eda") {
    const Eda eda = load_eda(ctx, o.rules, o.k, o.R);
    const ReducerState st = eda.reduce_stream_word(w);
    member = st.tape.empty();
    r.add("rules", eda.rules().size())
        .add("letters", st.letters_consumed)
        .add("rule_applications", st.applications)
        .add("max_cascade", st.max_cascade)
        .word("tape", ctx.alphabet, st.tape);
  } else {
    if (!o.radius) throw PreconditionError("the oracle decider needs --radius");
    const SubgroupEnumeration e(ctx.require_subgroup(), ctx.oracle, *o.radius, *o.radius);
    member = e.contains(w);
    r.add("letters", w.size()).add("radius", *o.radius).add("enumerated", e.elements().size());
  }
  r.add("verdict", member ? "member" : "non-member").add("seconds", seconds_since(t0));
  io.report.emit(r);
  return member ? kMember : kNonMember;
}

// ---------------------------------------------------------------- stream

struct EdaOptions {
  GroupOptions group;
  std::string rules;
  std::size_t k = kDefaultDehnLength;
  std::size_t R = 6;
};

int cmd_stream(const EdaOptions& o, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const Eda eda = load_eda(ctx, o.rules, o.k, o.R);
  ReducerState st;
  for (std::string tok; io.in >> tok;) {
    const std::size_t before = st.applications;
    eda.feed(st, ctx.alphabet.lookup(tok));
    Record r;
    r.add("letter", tok)
        .add("applications", st.applications - before)
        .word("tape", ctx.alphabet, st.tape);
    io.report.emit(r);
  }
  Record r;
  r.add("command", "stream")
      .add("letters", st.letters_consumed)
      .add("rule_applications", st.applications)
      .add("max_cascade", st.max_cascade)
      .word("tape", ctx.alphabet, st.tape)
      .add("tape_empty", st.tape.empty());
  io.report.emit(r);
  return 0;
}

// ---------------------------------------------------------------- generators

struct GenOptions {
  GroupOptions group;
  std::size_t k = kDefaultDehnLength;
  std::size_t R = 6;
  std::optional<std::size_t> with_dehn;
  std::string out;
};

int cmd_gen_dehn(const GenOptions& o, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const Eda eda = generate_dehn_rules(ctx.require_oracle(), o.k);
  write_to(o.out, io.out, [&](std::ostream& s) { write_rules(s, eda); });
  return 0;
}

int cmd_gen_anchored(const GenOptions& o, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const Eda eda = o.with_dehn ? quasiconvex_eda(*ctx.member, ctx.require_oracle(), *o.with_dehn, o.R)
                              : Eda(ctx.alphabet, generate_anchored_rules(
                                                      *ctx.member, ctx.require_oracle(), o.R));
  write_to(o.out, io.out, [&](std::ostream& s) { write_rules(s, eda); });
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  GroupOptions group;
  std::string suite;
  std::string rules;
  std::size_t k = kDefaultDehnLength;
  std::size_t R = 6;
  std::size_t D = 3;
  std::size_t E = 3;
  std::size_t K = 3;
  std::size_t limit = 8;
  std::optional<std::size_t> maxlen;
  std::optional<std::size_t> radius;
  std::optional<std::size_t> products;
  std::string ratio;
};

void emit_failure(Io& io, std::size_t index, Record detail) {
  Record r;
  r.add("failure", index);
  for (const auto& [k, v] : detail.fields()) r.add(k, v);
  io.report.emit(r);
}

int finish(Io& io, Record& r, bool passed, Clock::time_point t0) {
  r.add("seconds", seconds_since(t0)).add("verdict", passed ? "pass" : "fail");
  io.report.emit(r);
  return passed ? 0 : 1;
}

int verify_pde(const VerifyOptions& o, const GroupContext& ctx, Io& io, Record& r) {
  const auto t0 = Clock::now();
  const Eda eda = o.rules.empty() ? generate_dehn_rules(ctx.require_oracle(), o.k)
                                  : load_eda(ctx, o.rules, o.k, o.R);
  const PdeReport rep = gwp::verify_pde(eda, ctx.require_oracle(), o.D, o.E, o.maxlen);
  r.add("rules", eda.rules().size())
      .add("D", rep.D)
      .add("E", rep.E)
      .add("max_length", rep.max_length)
      .add("short_words", rep.short_words_checked)
      .add("long_words", rep.long_words_checked);
  std::size_t n = 0;
  if (rep.geodesic_violation) {
    Record f;
    f.add("condition", "short-geodesic").word("witness", ctx.alphabet, *rep.geodesic_violation);
    emit_failure(io, n++, f);
  }
  if (rep.d_geodesic_violation) {
    Record f;
    f.add("condition", "D-geodesic").word("witness", ctx.alphabet, *rep.d_geodesic_violation);
    emit_failure(io, n++, f);
  }
  return finish(io, r, rep.passed(), t0);
}

int verify_realtime(const VerifyOptions& o, const GroupContext& ctx, Io& io, Record& r,
                    unsigned jobs) {
  const auto t0 = Clock::now();
  const std::size_t maxlen = o.maxlen.value_or(10);
  const Eda eda = load_eda(ctx, o.rules, o.k, o.R);
  const CosetTable table = coset_bfs(*ctx.member, ctx.require_oracle(), o.radius.value_or(maxlen));
  const RealtimeReport rep = verify_realtime_bound(eda, table, maxlen, o.R, jobs);
  bool passed = rep.passed();
  r.add("rules", eda.rules().size())
      .add("max_length", maxlen)
      .add("cosets", table.size())
      .add("words", rep.words_checked)
      .add("max_ratio", format_fraction(rep.max_ratio));
  if (rep.max_ratio_witness) r.word("ratio_witness", ctx.alphabet, *rep.max_ratio_witness);
  if (!o.ratio.empty()) {
    const Fraction bound = parse_fraction(o.ratio);
    r.add("ratio_bound", format_fraction(bound));
    if (!(rep.max_ratio <= bound)) {
      passed = false;
      Record f;
      f.add("condition", "ratio").word("witness", ctx.alphabet, *rep.max_ratio_witness);
      emit_failure(io, 0, f);
    }
  }
  r.add("membership_mismatches", rep.membership_mismatches)
      .add("R", o.R)
      .add("distance_checked", rep.distance_checked)
      .add("distance_violations", rep.distance_violations);
  if (rep.membership_witness) {
    Record f;
    f.add("condition", "membership").word("witness", ctx.alphabet, *rep.membership_witness);
    emit_failure(io, 1, f);
  }
  if (rep.distance_witness) {
    Record f;
    f.add("condition", "distance").word("witness", ctx.alphabet, *rep.distance_witness);
    emit_failure(io, 2, f);
  }
  return finish(io, r, passed, t0);
}

Record gib_record(const GroupContext& ctx, const BallReport& b) {
  Record f;
  f.word("centre", ctx.alphabet, b.centre_word).add("radius", b.radius).add("passed", b.passed);
  if (b.witness)
    f.word("path", ctx.alphabet, b.witness->path)
        .add("symbol", ctx.alphabet.name(b.witness->symbol));
  return f;
}

int verify_gib(const VerifyOptions& o, const GroupContext& ctx, Io& io, Record& r, unsigned jobs) {
  const auto t0 = Clock::now();
  const auto reports = gib_check(*ctx.member, ctx.require_oracle(), o.k, o.K, o.limit, jobs);
  std::size_t failed = 0;
  for (const BallReport& b : reports)
    if (!b.passed) emit_failure(io, failed++, gib_record(ctx, b));
  r.add("k", o.k).add("K", o.K).add("limit", o.limit).add("centres", reports.size()).add("failures",
                                                                                         failed);
  return finish(io, r, failed == 0, t0);
}

int verify_star(const VerifyOptions& o, const GroupContext& ctx, Io& io, Record& r) {
  const auto t0 = Clock::now();
  const std::size_t maxlen = o.maxlen.value_or(8);
  const GwpPda& pda = ctx.require_pda();
  const Alphabet& y = pda.alphabet();
  std::size_t pairs = 0, failures = 0;
  std::optional<Word> witness;
  walk_words(y, maxlen, [&](const Word& w) {
    if (!is_freely_reduced(y, w)) return false;
    const PdaConfig c = pda_run(pda, w).final;
    for (std::size_t s = 0; s < y.size(); ++s) {
      const Symbol ys = symbol_at(s);
      if (!w.empty() && y.inverse(w.back()) == ys) continue;
      const PdaConfig d = pda_step(pda, pda_step(pda, c, ys), y.inverse(ys));
      ++pairs;
      if (d != c) {
        ++failures;
        Word wy = w;
        wy.push_back(ys);
        keep_least(witness, wy);
      }
    }
    return true;
  });
  r.add("max_length", maxlen).add("pairs", pairs).add("failures", failures);
  if (witness) {
    Record f;
    f.add("condition", "star").word("witness", y, *witness);
    emit_failure(io, 0, f);
  }
  return finish(io, r, failures == 0, t0);
}

int verify_equivalence(const VerifyOptions& o, const GroupContext& ctx, Io& io, Record& r,
                       unsigned jobs) {
  const auto t0 = Clock::now();
  const std::size_t maxlen = o.maxlen.value_or(10);
  struct Acc {
    std::size_t words = 0;
    std::size_t disagreements = 0;
    std::optional<Word> witness;
  };
  std::vector<Acc> acc(ctx.alphabet.size() + 1);
  std::function<bool(const Word&)> reference;
  std::optional<SubgroupEnumeration> brute;
  if (ctx.core) {
    r.add("reference", "stallings-core");
    reference = [&](const Word& w) { return core_membership(*ctx.core, free_reduce(ctx.alphabet, w)); };
  } else if (ctx.decider) {
    const std::size_t products = o.products.value_or(maxlen);
    brute.emplace(ctx.require_subgroup(), ctx.oracle, products, maxlen);
    r.add("reference", "enumeration").add("products", products);
    reference = [&](const Word& w) { return brute->contains(w); };
  } else {
    throw ConfigError("the equivalence suite needs a free or virtually free group");
  }
  each_word_parallel(ctx.alphabet, maxlen, jobs, [&](std::size_t slot, const Word& w) {
    Acc& a = acc[slot];
    ++a.words;
    const bool got = ctx.decider ? ctx.decider->contains(w) : pda_run(*ctx.pda, w).accepted;
    if (got != reference(w)) {
      ++a.disagreements;
      keep_least(a.witness, w);
    }
  });
  Acc total;
  for (const Acc& a : acc) {
    total.words += a.words;
    total.disagreements += a.disagreements;
    if (a.witness) keep_least(total.witness, *a.witness);
  }
  r.add("max_length", maxlen).add("words", total.words).add("disagreements", total.disagreements);
  if (total.witness) {
    Record f;
    f.add("condition", "equivalence").word("witness", ctx.alphabet, *total.witness);
    emit_failure(io, 0, f);
  }
  return finish(io, r, total.disagreements == 0, t0);
}

int cmd_verify(const VerifyOptions& o, const Globals& g, Io& io) {
  const GroupContext ctx = load_group(o.group);
  Record r;
  r.add("command", "verify")
      .add("suite", o.suite)
      .add("group", ctx.group_text)
      .add("subgroup", ctx.subgroup_text)
      .add("jobs", g.jobs);
  if (o.suite == "pde") return verify_pde(o, ctx, io, r);
  if (o.suite == "realtime") return verify_realtime(o, ctx, io, r, g.jobs);
  if (o.suite == "gib") return verify_gib(o, ctx, io, r, g.jobs);
  if (o.suite == "star") return verify_star(o, ctx, io, r);
  if (o.suite == "equivalence") return verify_equivalence(o, ctx, io, r, g.jobs);
  throw ParseError("unknown suite '" + o.suite + "'");
}

// ---------------------------------------------------------------- gib-check

int cmd_gib_check(const VerifyOptions& o, const Globals& g, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const auto t0 = Clock::now();
  const auto reports = gib_check(*ctx.member, ctx.require_oracle(), o.k, o.K, o.limit, g.jobs);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    Record r;
    r.add("centre_index", i);
    for (const auto& [k, v] : gib_record(ctx, reports[i]).fields()) r.add(k, v);
    io.report.emit(r);
    failed += !reports[i].passed;
  }
  Record r;
  r.add("command", "gib-check")
      .add("group", ctx.group_text)
      .add("subgroup", ctx.subgroup_text)
      .add("k", o.k)
      .add("K", o.K)
      .add("limit", o.limit)
      .add("centres", reports.size())
      .add("failures", failed);
  return finish(io, r, failed == 0, t0);
}

// ---------------------------------------------------------------- run-pda

struct RunPdaOptions {
  GroupOptions group;
  std::vector<std::string> word;
  bool trace = false;
};

int cmd_run_pda(const RunPdaOptions& o, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const GwpPda& pda = ctx.require_pda();
  const Word w = parse_word(ctx.alphabet, join(o.word));
  std::vector<PdaStep> trace;
  bool accepted = false;
  PdaConfig final;
  std::optional<CosetIndex> coset;
  if (ctx.decider) {
    const VfRun run = ctx.decider->run(w, &trace);
    accepted = run.member;
    final = run.final;
    coset = run.coset;
  } else {
    const PdaRun run = pda_run(pda, w, &trace);
    accepted = run.accepted;
    final = run.final;
  }
  if (o.trace) {
    const Alphabet& y = pda.alphabet();
    auto sym = [&](const std::optional<StackSymbol>& s) {
      return s ? format_stack_symbol(y, *s) : std::string("-");
    };
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const PdaStep& s = trace[i];
      Record r;
      r.add("step", i + 1)
          .add("state", format_state(pda.fsa(), s.from))
          .add("input", y.name(s.input))
          .add("popped", sym(s.popped))
          .add("pushed", sym(s.pushed))
          .add("next", format_state(pda.fsa(), s.to))
          .add("row", static_cast<int>(s.row));
      io.report.emit(r);
    }
  }
  Record r;
  r.add("command", "run-pda")
      .add("group", ctx.group_text)
      .add("subgroup", ctx.subgroup_text)
      .word("word", ctx.alphabet, w)
      .add("letters", w.size())
      .add("pda_steps", trace.size());
  if (coset) r.add("coset", *coset + 1);
  r.add("final", format_config(pda, final)).add("verdict", accepted ? "member" : "non-member");
  io.report.emit(r);
  return accepted ? kMember : kNonMember;
}

// ---------------------------------------------------------------- oracle-dump

struct DumpOptions {
  GroupOptions group;
  std::size_t radius = 4;
  std::string out;
};

int cmd_oracle_dump(const DumpOptions& o, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const CosetTable table = coset_bfs(*ctx.member, ctx.require_oracle(), o.radius);
  write_to(o.out, io.out, [&](std::ostream& s) {
    for (Vertex v = 0; v < table.size(); ++v)
      s << quote(format_word(ctx.alphabet, table.representative(v)), true) << ' '
        << table.length(v) << '\n';
  });
  return 0;
}

// ---------------------------------------------------------------- fold

struct FoldOptions {
  GroupOptions group;
  std::string out;
};

int cmd_fold(const FoldOptions& o, Io& io) {
  const GroupContext ctx = load_group(o.group);
  if (!ctx.core && !ctx.decider) throw ConfigError("fold needs a free or virtually free group");
  const XGraph& core = ctx.core ? *ctx.core : ctx.decider->core();
  write_to(o.out, io.out, [&](std::ostream& s) { write_graph(s, core); });
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  GroupOptions group;
  std::string decider = "eda";
  std::string corpus;
  std::string rules;
  std::size_t k = kDefaultDehnLength;
  std::size_t R = 6;
  std::size_t count = 100;
  std::size_t length = 1000;
  std::string write_corpus;
};

std::vector<Word> load_corpus(const BenchOptions& o, const Alphabet& a, std::uint64_t seed) {
  std::vector<Word> words;
  if (!o.corpus.empty()) {
    std::ifstream in(resolve_fixture(o.corpus));
    for (std::string line; std::getline(in, line);) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      words.push_back(parse_word(a, line));
    }
    return words;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  words.resize(o.count);
  for (Word& w : words) {
    w.resize(o.length);
    for (Symbol& s : w) s = symbol_at(pick(rng));
  }
  return words;
}

int cmd_bench(const BenchOptions& o, const Globals& g, Io& io) {
  const GroupContext ctx = load_group(o.group);
  const std::vector<Word> corpus = load_corpus(o, ctx.alphabet, g.seed);
  if (!o.write_corpus.empty())
    write_to(o.write_corpus, io.out, [&](std::ostream& s) {
      for (const Word& w : corpus) s << format_word(ctx.alphabet, w) << '\n';
    });
  std::size_t letters = 0, work = 0, max_per_letter = 0, members = 0, violations = 0;
  std::optional<Word> witness;
  std::optional<Eda> eda;
  if (o.decider == "eda") eda.emplace(load_eda(ctx, o.rules, o.k, o.R));
  const auto t0 = Clock::now();
  for (const Word& w : corpus) {
    letters += w.size();
    if (eda) {
      const ReducerState st = eda->reduce_stream_word(w);
      work += st.applications;
      max_per_letter = std::max(max_per_letter, st.max_cascade);
      members += st.tape.empty();
      if (st.applications > w.size()) {
        ++violations;
        keep_least(witness, w);
      }
    } else if (ctx.decider) {
      const GwpPda& pda = ctx.decider->pda();
      const SchreierRewriter& rw = ctx.decider->spec().rewriter;
      PdaConfig c = pda.start();
      CosetIndex coset = 0;
      for (Symbol x : w) {
        const Word& emitted = rw.emission(coset, x);
        for (Symbol y : emitted) pda.step(c, y);
        work += emitted.size();
        max_per_letter = std::max(max_per_letter, emitted.size());
        coset = rw.next(coset, x);
      }
      members += rw.is_marked(coset) && pda.accepting(c);
    } else {
      const PdaRun run = pda_run(ctx.require_pda(), w);
      work += run.steps;
      if (!w.empty()) max_per_letter = std::max<std::size_t>(max_per_letter, 1);
      members += run.accepted;
    }
  }
  const double secs = seconds_since(t0);
  Record r;
  r.add("command", "bench")
      .add("decider", o.decider)
      .add("group", ctx.group_text)
      .add("subgroup", ctx.subgroup_text)
      .add("words", corpus.size())
      .add("letters", letters)
      .add(eda ? "rule_applications" : "pda_steps", work)
      .add("max_per_letter", max_per_letter)
      .add("mean_per_letter", letters ? static_cast<double>(work) / static_cast<double>(letters) : 0.0)
      .add("members", members)
      .add("seconds", secs)
      .add("letters_per_second", secs > 0 ? static_cast<double>(letters) / secs : 0.0);
  if (eda) r.add("work_violations", violations);
  if (witness) r.word("witness", ctx.alphabet, *witness);
  io.report.emit(r);
  return violations == 0 ? 0 : 1;
}

void add_eda_options(CLI::App* app, std::string& rules, std::size_t& k, std::size_t& R) {
  app->add_option("--rules", rules, "rule file (default: generated Dehn plus anchored rules)");
  app->add_option("--k", k, "Dehn rule length")->capture_default_str();
  app->add_option("--R", R, "anchored rule length")->capture_default_str();
}

void add_verify_options(CLI::App* app, VerifyOptions& v) {
  add_group_options(app, v.group);
  add_eda_options(app, v.rules, v.k, v.R);
  app->add_option("--D", v.D, "pde: element length bound")->capture_default_str();
  app->add_option("--E", v.E, "pde: word length bound")->capture_default_str();
  app->add_option("--K", v.K, "gib: smallest centre distance")->capture_default_str();
  app->add_option("--limit", v.limit, "gib: largest centre distance")->capture_default_str();
  app->add_option("--maxlen", v.maxlen, "longest word checked");
  app->add_option("--radius", v.radius, "realtime: coset table radius (default maxlen)");
  app->add_option("--products", v.products, "equivalence: products enumerated for vf groups");
  app->add_option("--ratio", v.ratio, "realtime: fail when the tape ratio exceeds p/q");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Subgroup membership for free, virtually free and hyperbolic groups", "gwpkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--pretty", g.pretty, "human readable output");
  app.add_option("--seed", g.seed, "seed for generated corpora")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for verify suites")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  QueryOptions query;
  auto* q = app.add_subcommand("query", "decide membership of one word");
  add_group_options(q, query.group);
  q->add_option("--decider", query.decider, "pda, eda or oracle")
      ->check(CLI::IsMember({"pda", "eda", "oracle"}))
      ->capture_default_str();
  add_eda_options(q, query.rules, query.k, query.R);
  q->add_option("--radius", query.radius, "oracle: products enumerated and trusted radius");
  q->add_option("word", query.word, "letters of the word");

  EdaOptions stream;
  auto* st = app.add_subcommand("stream", "reduce letters read from standard input");
  add_group_options(st, stream.group);
  add_eda_options(st, stream.rules, stream.k, stream.R);

  GenOptions dehn;
  auto* gd = app.add_subcommand("gen-dehn", "write Dehn rules");
  add_group_options(gd, dehn.group);
  gd->add_option("--k", dehn.k, "longest left hand side")->capture_default_str();
  gd->add_option("--out", dehn.out, "output file");

  GenOptions anchored;
  auto* ga = app.add_subcommand("gen-anchored", "write anchored rules");
  add_group_options(ga, anchored.group);
  ga->add_option("--R", anchored.R, "longest left hand side")->capture_default_str();
  ga->add_option("--with-dehn", anchored.with_dehn, "also write Dehn rules of this length");
  ga->add_option("--out", anchored.out, "output file");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", verify.suite, "pde, realtime, gib, star or equivalence")
      ->required()
      ->check(CLI::IsMember({"pde", "realtime", "gib", "star", "equivalence"}));
  add_verify_options(v, verify);

  VerifyOptions vpde;
  vpde.suite = "pde";
  auto* vp = app.add_subcommand("verify-pde", "same as verify pde");
  add_verify_options(vp, vpde);

  VerifyOptions vrt;
  vrt.suite = "realtime";
  auto* vr = app.add_subcommand("verify-realtime", "same as verify realtime");
  add_verify_options(vr, vrt);

  VerifyOptions gib;
  auto* gc = app.add_subcommand("gib-check", "compare Schreier balls with the Cayley ball");
  add_group_options(gc, gib.group);
  gc->add_option("--k", gib.k, "ball radius")->capture_default_str();
  gc->add_option("--K", gib.K, "smallest centre distance")->capture_default_str();
  gc->add_option("--limit", gib.limit, "largest centre distance")->capture_default_str();

  RunPdaOptions runpda;
  auto* rp = app.add_subcommand("run-pda", "run the pushdown automaton on one word");
  add_group_options(rp, runpda.group);
  rp->add_flag("--trace", runpda.trace, "one line per transition");
  rp->add_option("word", runpda.word, "letters of the word");

  DumpOptions dump;
  auto* od = app.add_subcommand("oracle-dump", "write coset representatives and lengths");
  add_group_options(od, dump.group);
  od->add_option("--radius", dump.radius, "search radius")->capture_default_str();
  od->add_option("--out", dump.out, "output file");

  FoldOptions fold;
  auto* fo = app.add_subcommand("fold", "write the Stallings core as a graph dump");
  add_group_options(fo, fold.group);
  fo->add_option("--out", fold.out, "output file");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "per-letter work statistics over a corpus");
  add_group_options(b, bench.group);
  b->add_option("--decider", bench.decider, "pda or eda")
      ->check(CLI::IsMember({"pda", "eda"}))
      ->capture_default_str();
  b->add_option("--corpus", bench.corpus, "file with one word per line");
  add_eda_options(b, bench.rules, bench.k, bench.R);
  b->add_option("--count", bench.count, "generated words")->capture_default_str();
  b->add_option("--length", bench.length, "letters per generated word")->capture_default_str();
  b->add_option("--write-corpus", bench.write_corpus, "save the corpus to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kError;
  }

  Io io{in, out, Reporter(out, g.pretty)};
  try {
    if (q->parsed()) return cmd_query(query, io);
    if (st->parsed()) return cmd_stream(stream, io);
    if (gd->parsed()) return cmd_gen_dehn(dehn, io);
    if (ga->parsed()) return cmd_gen_anchored(anchored, io);
    if (v->parsed()) return cmd_verify(verify, g, io);
    if (vp->parsed()) return cmd_verify(vpde, g, io);
    if (vr->parsed()) return cmd_verify(vrt, g, io);
    if (gc->parsed()) return cmd_gib_check(gib, g, io);
    if (rp->parsed()) return cmd_run_pda(runpda, io);
    if (od->parsed()) return cmd_oracle_dump(dump, io);
    if (fo->parsed()) return cmd_fold(fold, io);
    if (b->parsed()) return cmd_bench(bench, g, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace gwpcli
