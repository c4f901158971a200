#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "gwp/bruteforce.hpp"
#include "gwp/eda.hpp"
#include "gwp/eda_build.hpp"
#include "gwp/eda_verify.hpp"
#include "gwp/error.hpp"
#include "gwp/stallings.hpp"
#include "gwp/words.hpp"
#include "support.hpp"

using namespace gwp;
using namespace testing;

namespace {

Rule plain(const Alphabet& a, const std::string& l, const std::string& r) {
  return {w(a, l), w(a, r), false};
}
Rule anchored(const Alphabet& a, const std::string& l, const std::string& r) {
  return {w(a, l), w(a, r), true};
}

Eda free_rules(const Alphabet& a) {
  std::vector<Rule> rs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Symbol x = symbol_at(i);
    rs.push_back({{x, a.inverse(x)}, {}, false});
  }
  return Eda(a, rs);
}

/// The application order applied literally to the whole word: collect every
/// occurrence, take the earliest end, then the longest lhs, then anchored.
Word naive_reduce_eda(const Eda& e, Word u) {
  for (;;) {
    std::optional<std::tuple<std::size_t, std::size_t, bool, const Rule*>> best;
    for (const Rule& r : e.rules()) {
      const std::size_t n = r.lhs.size();
      for (std::size_t start = 0; start + n <= u.size(); ++start) {
        if (r.anchored && start != 0) break;
        if (!std::equal(r.lhs.begin(), r.lhs.end(), u.begin() + static_cast<std::ptrdiff_t>(start)))
          continue;
        const std::size_t end = start + n;
        auto key = std::make_tuple(end, n, r.anchored, &r);
        if (!best || end < std::get<0>(*best) ||
            (end == std::get<0>(*best) && (n > std::get<1>(*best) ||
                                           (n == std::get<1>(*best) && r.anchored))))
          best = key;
      }
    }
    if (!best) return u;
    const auto [end, n, anch, r] = *best;
    const auto pos = u.begin() + static_cast<std::ptrdiff_t>(end - n);
    u.erase(pos, pos + static_cast<std::ptrdiff_t>(n));
    u.insert(u.begin() + static_cast<std::ptrdiff_t>(end - n), r->rhs.begin(), r->rhs.end());
  }
}

std::vector<std::pair<std::string, Eda>> fixture_edas() {
  const Alphabet a = f2();
  const auto fo = make_oracle(FreeGroupData{a});
  const CoreMembership ha(SubgroupSpec::parse(a, "a"), a);
  const CoreMembership hb(SubgroupSpec::parse(a, "b b"), a);
  const auto z2 = std::make_shared<const FreeAbelianOracle>(2);
  std::vector<std::pair<std::string, Eda>> out;
  out.emplace_back("free", free_rules(a));
  out.emplace_back("dehn-free-4", generate_dehn_rules(*fo, 4));
  out.emplace_back("quasiconvex-a", quasiconvex_eda(ha, *fo, 4, 6));
  out.emplace_back("quasiconvex-bb", quasiconvex_eda(hb, *fo, 4, 4));
  out.emplace_back("dehn-z2-4", generate_dehn_rules(*z2, 4));
  out.emplace_back("overlap", Eda(a, {plain(a, "a b", "b"), plain(a, "b a a", "a"),
                                      anchored(a, "b b", "a"), anchored(a, "a", "")}));
  return out;
}

}  // namespace

TEST_CASE("eda construction checks") {
  const Alphabet a = f2();
  CHECK_THROWS_AS(Eda(a, {plain(a, "a", "b")}), ConstructionError);
  CHECK_THROWS_AS(Eda(a, {plain(a, "a b", "a"), plain(a, "a b", "")}), ConstructionError);
  CHECK_NOTHROW(Eda(a, {plain(a, "a b", "a"), anchored(a, "a b", "")}));
  CHECK_THROWS_AS(Eda(a, {Rule{{symbol_at(9), symbol_at(0)}, {}, false}}), ConstructionError);
}

TEST_CASE("rule file round trip") {
  const Alphabet a = f2();
  std::istringstream in("# rules\na a^-1 ->\nH a -> \nb b b -> b^-1\n");
  const Eda e = read_rules(in, a);
  REQUIRE(e.rules().size() == 3);
  CHECK(e.rules()[1].anchored);
  CHECK(format_rule(a, e.rules()[1]) == "H a ->");
  CHECK(format_rule(a, e.rules()[2]) == "b b b -> b^-1");
  std::ostringstream out;
  write_rules(out, e);
  std::istringstream back(out.str());
  const Eda again = read_rules(back, a);
  CHECK(std::equal(e.rules().begin(), e.rules().end(), again.rules().begin(), again.rules().end()));
  std::istringstream bad("a a\n");
  CHECK_THROWS_AS(read_rules(bad, a), ParseError);
}

TEST_CASE("reduce_stream examples") {
  const Alphabet a = f2();
  const Eda fr = free_rules(a);
  ReducerState st{w(a, "a b"), 2, 0, 0};
  CHECK(s(a, fr.reduce_stream(st, a.lookup("b^-1")).tape) == "a");

  const Eda aa(a, {plain(a, "a a", "")});
  ReducerState st2{w(a, "b a"), 2, 0, 0};
  CHECK(s(a, aa.reduce_stream(st2, a.lookup("a")).tape) == "b");

  const Eda ha = fr.with_rules(std::vector<Rule>{anchored(a, "a", ""), anchored(a, "a^-1", "")});
  ReducerState run;
  std::vector<std::string> tapes;
  for (Symbol x : w(a, "b b^-1 a a")) {
    ha.feed(run, x);
    tapes.push_back(s(a, run.tape));
  }
  CHECK(tapes == std::vector<std::string>{"b", "", "", ""});
  CHECK(run.applications == 3);
}

TEST_CASE("reduce_batch examples") {
  const Alphabet a = f2();
  const auto fo = make_oracle(FreeGroupData{a});
  const Eda dehn = generate_dehn_rules(*fo, 4);
  CHECK(s(a, dehn.reduce_batch(w(a, "a b a b")).tape) == "a b a b");
  CHECK(dehn.reduce_batch(w(a, "a b a^-1 a b^-1 a^-1")).tape.empty());

  const Alphabet d = dihedral();
  const Eda absorb = adjoin_absorption_rules(Eda(d, {}), std::vector<Symbol>{d.lookup("x")});
  const ReducerState r = absorb.reduce_batch(w(d, "x x x"));
  CHECK(r.tape.empty());
  CHECK(r.applications == 3);
}

TEST_CASE("application order") {
  const Alphabet a = Alphabet::letters(3);
  // the occurrence ending first wins
  const Eda e1(a, {plain(a, "b c", "a"), plain(a, "a b", "c")});
  CHECK(s(a, e1.reduce_stream_word(w(a, "a b c")).tape) == "c c");
  CHECK(s(a, e1.reduce_batch(w(a, "a b c")).tape) == "c c");
  // equal ends: the longer lhs wins
  const Eda e2(a, {plain(a, "b c", ""), plain(a, "a b c", "b")});
  CHECK(s(a, e2.reduce_stream_word(w(a, "a b c")).tape) == "b");
  CHECK(s(a, e2.reduce_batch(w(a, "a b c")).tape) == "b");
  // equal ends and lengths: anchored wins, but only at the start
  const Eda e3(a, {plain(a, "a b", ""), anchored(a, "a b", "a")});
  CHECK(s(a, e3.reduce_stream_word(w(a, "a b")).tape) == "a");
  CHECK(s(a, e3.reduce_stream_word(w(a, "c a b")).tape) == "c");
  // plain rules never reach across the H marker
  const Eda e4(a, {anchored(a, "c", ""), plain(a, "a a", "")});
  CHECK(s(a, e4.reduce_stream_word(w(a, "a c a")).tape) == "a c a");
}

TEST_CASE("streaming, batch and the literal order agree") {
  const Alphabet a = f2();
  for (const auto& [name, e] : fixture_edas()) {
    CAPTURE(name);
    for (const Word& u : words_up_to(a, 7)) {
      const ReducerState st = e.reduce_stream_word(u);
      const ReducerState bt = e.reduce_batch(u);
      CHECK(st == bt);
      CHECK(st.tape == naive_reduce_eda(e, u));
      CHECK(e.is_reduced(st.tape));
      CHECK(st.applications <= u.size());
      CHECK(st.max_cascade <= u.size());
      CHECK(st.letters_consumed == u.size());
    }
  }
}

TEST_CASE("free reduction eda does one cancellation per letter") {
  const Alphabet a = f2();
  const Eda fr = free_rules(a);
  for (const Word& u : words_up_to(a, 8)) {
    const ReducerState st = fr.reduce_stream_word(u);
    CHECK(st.max_cascade <= 1);
    CHECK(st.tape == naive_reduce(a, u));
  }
}

TEST_CASE("rule declaration order does not matter") {
  const Alphabet a = f2();
  std::mt19937_64 rng(0);
  for (const auto& [name, e] : fixture_edas()) {
    std::vector<Rule> rs(e.rules().begin(), e.rules().end());
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(rs.begin(), rs.end(), rng);
      const Eda p(a, rs);
      for (const Word& u : words_up_to(a, 6)) CHECK(p.reduce_stream_word(u) == e.reduce_stream_word(u));
    }
  }
}

TEST_CASE("generate_dehn_rules examples") {
  const Alphabet a = f2();
  const auto fo = make_oracle(FreeGroupData{a});
  const Eda f = generate_dehn_rules(*fo, 2);
  CHECK(f.rules().size() == 4);
  for (const Rule& r : f.rules()) {
    CHECK(r.lhs.size() == 2);
    CHECK(r.lhs[1] == a.inverse(r.lhs[0]));
    CHECK(r.rhs.empty());
    CHECK_FALSE(r.anchored);
  }
  // longer k adds nothing in a free group
  CHECK(generate_dehn_rules(*fo, 5).rules().size() == 4);

  const auto z2 = make_oracle(FreeAbelianData{2});
  const Eda z = generate_dehn_rules(*z2, 2);
  CHECK(z.rules().size() == 4);
  for (const Rule& r : z.rules()) CHECK(r.lhs[1] == a.inverse(r.lhs[0]));

  const Alphabet d = dihedral();
  const auto dih = make_oracle(CosetTableData{dihedral_spec("g")});
  const Eda dr = generate_dehn_rules(*dih, 2);
  REQUIRE(dr.rules().size() == 2);
  CHECK(format_rule(d, dr.rules()[0]) == "x x ->");
  CHECK(format_rule(d, dr.rules()[1]) == "y y ->");
  CHECK_THROWS_AS(generate_dehn_rules(*fo, 1), PreconditionError);
}

TEST_CASE("Z^2 Dehn rules are sound and minimal") {
  const Alphabet a = f2();
  const FreeAbelianOracle z2(2);
  auto geo = [&](const Word& u) {
    const auto e = z2.exponents(u);
    return static_cast<std::size_t>(std::labs(e[0]) + std::labs(e[1]));
  };
  const Eda z = generate_dehn_rules(z2, 4);
  for (const Rule& r : z.rules()) {
    CAPTURE(format_rule(a, r));
    CHECK(z2.equal(r.lhs, r.rhs));
    CHECK(geo(r.lhs) < r.lhs.size());
    CHECK(geo(r.rhs) == r.rhs.size());
    for (std::size_t i = 0; i < r.lhs.size(); ++i)
      for (std::size_t j = i + 1; j <= r.lhs.size(); ++j)
        if (j - i < r.lhs.size()) CHECK(geo(Word(r.lhs.begin() + i, r.lhs.begin() + j)) == j - i);
  }
  // "a b a^-1" -> "b" and every word of length <= 4 ends up geodesic
  bool found = false;
  for (const Rule& r : z.rules()) found |= s(a, r.lhs) == "a b a^-1" && s(a, r.rhs) == "b";
  CHECK(found);
  for (const Word& u : words_up_to(a, 4)) CHECK(z.reduce_batch(u).tape.size() == geo(u));
}

TEST_CASE("generate_anchored_rules examples") {
  const Alphabet a = f2();
  const auto fo = make_oracle(FreeGroupData{a});
  auto names = [&](const std::vector<Rule>& rs) {
    std::vector<std::string> out;
    for (const Rule& r : rs) out.push_back(format_rule(a, r));
    return out;
  };
  const CoreMembership ha(SubgroupSpec::parse(a, "a"), a);
  CHECK(names(generate_anchored_rules(ha, *fo, 1)) == std::vector<std::string>{"H a ->", "H a^-1 ->"});
  CHECK(names(generate_anchored_rules(ha, *fo, 6)) == std::vector<std::string>{"H a ->", "H a^-1 ->"});

  const TrivialSubgroup triv(fo);
  CHECK(generate_anchored_rules(triv, *fo, 3).empty());

  const CoreMembership hb(SubgroupSpec::parse(a, "b b"), a);
  CHECK(names(generate_anchored_rules(hb, *fo, 2)) ==
        std::vector<std::string>{"H b b ->", "H b^-1 b^-1 ->"});

  const CoreMembership h2(SubgroupSpec::parse(a, "a a b, a b a"), a);
  for (const Rule& r : generate_anchored_rules(h2, *fo, 4)) {
    CHECK(r.anchored);
    CHECK(h2.same_coset(r.lhs, r.rhs));
    CHECK(r.rhs.size() < r.lhs.size());
  }
}

TEST_CASE("adjoin_absorption_rules examples") {
  const Alphabet a = f2();
  const Eda base = free_rules(a);
  const std::vector<Symbol> as{a.lookup("a"), a.lookup("a^-1")};
  const Eda e = adjoin_absorption_rules(base, as);
  CHECK(e.rules().size() == 6);
  CHECK(std::count_if(e.rules().begin(), e.rules().end(), [](const Rule& r) { return r.anchored; }) == 2);
  CHECK(adjoin_absorption_rules(base, {}).rules().size() == 4);
  const Alphabet d = dihedral();
  CHECK(adjoin_absorption_rules(Eda(d, {}), std::vector<Symbol>{d.lookup("x")}).rules().size() == 1);
  CHECK_THROWS_AS(adjoin_absorption_rules(e, as), ConstructionError);

  const CoreMembership ha(SubgroupSpec::parse(a, "a, b a b^-1"), a);
  CHECK(subgroup_letters(ha) == as);
}

TEST_CASE("verify_pde examples") {
  const Alphabet a = f2();
  const auto fo = make_oracle(FreeGroupData{a});
  CHECK(verify_pde(generate_dehn_rules(*fo, 2), *fo, 3, 3).passed());

  const PdeReport none = verify_pde(Eda(a, {}), *fo, 2, 2);
  CHECK_FALSE(none.passed());
  REQUIRE(none.geodesic_violation);
  CHECK(s(a, *none.geodesic_violation) == "a a^-1");

  // Z^2 with free cancellation only: find the expected witness by letter
  // counting over freely reduced words in shortlex order
  const FreeAbelianOracle z2(2);
  std::optional<Word> expect;
  for (const Word& u : words_up_to(a, 4)) {
    if (!is_freely_reduced(a, u)) continue;
    const auto e = z2.exponents(u);
    if (static_cast<std::size_t>(std::labs(e[0]) + std::labs(e[1])) < u.size()) {
      expect = u;
      break;
    }
  }
  REQUIRE(expect);
  const PdeReport zr = verify_pde(free_rules(a), z2, 4, 4);
  REQUIRE(zr.geodesic_violation);
  CHECK(*zr.geodesic_violation == *expect);
  CHECK(s(a, *expect) == "a b a^-1");

  CHECK_THROWS_AS(verify_pde(free_rules(a), *fo, 2, 3), PreconditionError);
}

TEST_CASE("verify_realtime_bound examples") {
  const Alphabet a = f2();
  const auto fo = make_oracle(FreeGroupData{a});
  const CoreMembership ha(SubgroupSpec::parse(a, "a"), a);
  const CosetTable table = coset_bfs(ha, *fo, 10);
  const RealtimeReport r = verify_realtime_bound(quasiconvex_eda(ha, *fo, 4, 6), table, 10, 6, 2);
  CHECK(r.passed());
  CHECK(r.max_ratio <= Fraction{2, 1});
  CHECK(r.words_checked == (word_count(4, 11) - 1) / 3);

  const TrivialSubgroup triv(fo);
  const CosetTable elements = coset_bfs(triv, *fo, 8);
  const RealtimeReport t = verify_realtime_bound(generate_dehn_rules(*fo, 4), elements, 8);
  CHECK(t.passed());
  CHECK(t.max_ratio.num == t.max_ratio.den);

  // dropping the absorption rules breaks membership at once
  const RealtimeReport bad = verify_realtime_bound(generate_dehn_rules(*fo, 4), table, 3);
  CHECK(bad.membership_mismatches > 0);
  REQUIRE(bad.membership_witness);
  CHECK(s(a, *bad.membership_witness) == "a");
  CHECK_THROWS_AS(verify_realtime_bound(free_rules(a), table, 11), PreconditionError);
}
