#include "doctest.h"
#include "gwp/bruteforce.hpp"
#include "gwp/error.hpp"
#include "gwp/stallings.hpp"
#include "support.hpp"

using namespace gwp;
using namespace testing;

namespace {

std::shared_ptr<const NormalFormOracle> free2() { return make_oracle(FreeGroupData{f2()}); }

}  // namespace

TEST_CASE("coset_bfs examples") {
  const Alphabet a = f2();
  const auto o = free2();
  const CoreMembership ha(SubgroupSpec::parse(a, "a"), a);
  const CosetTable t = coset_bfs(ha, *o, 3);
  CHECK(t.coset_length(w(a, "a a b")) == std::size_t{1});
  CHECK(t.coset_length({}) == std::size_t{0});
  CHECK(t.representative(0).empty());
  CHECK(t.is_member(w(a, "a^-1 a^-1 a^-1")) == true);
  CHECK(t.is_member(w(a, "b a")) == false);
  CHECK(t.size() == 1 + 2 + 6 + 18);
  CHECK_FALSE(t.coset_length(w(a, "b b b b")));

  const auto z2 = std::make_shared<const FreeAbelianOracle>(2);
  const LatticeMembership za(z2, SubgroupSpec::parse(a, "a"));
  const CosetTable tz = coset_bfs(za, *z2, 3);
  CHECK(tz.coset_length(w(a, "b b a")) == std::size_t{2});
  CHECK(tz.size() == 7);
}

TEST_CASE("coset_bfs reports the radius it reached") {
  const Alphabet a = f2();
  const auto o = free2();
  const TrivialSubgroup triv(o);
  try {
    coset_bfs(triv, *o, 6, 100);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.achieved_radius() == 3);  // 53 elements fit, 161 do not
  }
}

TEST_CASE("coset lengths are 1-Lipschitz along edges") {
  const Alphabet a = f2();
  const auto o = free2();
  for (const char* sub : {"a", "a a, b", "a b a^-1, b b"}) {
    const CoreMembership m(SubgroupSpec::parse(a, sub), a);
    const CosetTable t = coset_bfs(m, *o, 6);
    for (Vertex v = 0; v < t.size(); ++v)
      for (std::size_t x = 0; x < a.size(); ++x)
        if (auto u = t.graph().target(v, symbol_at(x))) {
          const auto lv = t.length(v), lu = t.length(*u);
          CHECK((lv > lu ? lv - lu : lu - lv) <= 1);
        }
  }
}

TEST_CASE("subgroup_enumerate examples") {
  const Alphabet a = f2();
  const auto o = free2();
  const SubgroupEnumeration e(SubgroupSpec::parse(a, "a"), o, 3, 3);
  std::vector<std::string> got;
  for (const Word& x : e.elements()) got.push_back(s(a, x));
  CHECK(got == std::vector<std::string>{"", "a", "a^-1", "a a", "a^-1 a^-1", "a a a", "a^-1 a^-1 a^-1"});

  const SubgroupEnumeration e2(SubgroupSpec::parse(a, "a a, b"), o, 6, 6);
  CHECK(e2.contains(w(a, "a a b")));
  CHECK_FALSE(e2.contains(w(a, "a")));
  CHECK(e2.verdict(w(a, "a b a b a b a")) == std::nullopt);
  CHECK_THROWS_AS(e2.contains(w(a, "a b a b a b a")), RadiusExceededError);
  CHECK_THROWS_AS(e2.coset_key(w(a, "a b a b")), RadiusExceededError);
}

TEST_CASE("enumeration agrees with the Stallings core") {
  const Alphabet a = f2();
  const auto o = free2();
  for (const char* sub : {"a", "a a, b", "a b a^-1, b b"}) {
    CAPTURE(sub);
    const SubgroupSpec k = SubgroupSpec::parse(a, sub);
    // these generating sets are Nielsen reduced: n products have length >= n
    const SubgroupEnumeration e(k, o, 8, 8);
    const XGraph core = stallings_fold(k, a);
    for (const Word& u : words_up_to(a, 8))
      if (is_freely_reduced(a, u)) CHECK(e.contains(u) == core_membership(core, u));
  }
}

TEST_CASE("enumeration coset keys rebuild the core's coset table") {
  const Alphabet a = f2();
  const auto o = free2();
  for (const char* sub : {"a", "a b a^-1, b b"}) {
    const SubgroupSpec k = SubgroupSpec::parse(a, sub);
    const SubgroupEnumeration e(k, o, 10, 10);
    const CoreMembership c(k, a);
    const CosetTable te = coset_bfs(e, *o, 4);
    const CosetTable tc = coset_bfs(c, *o, 4);
    CHECK(te.graph() == tc.graph());
    for (Vertex v = 0; v < te.size(); ++v) CHECK(te.representative(v) == tc.representative(v));
  }
}

TEST_CASE("lattice membership") {
  const Alphabet a = f2();
  const auto z2 = std::make_shared<const FreeAbelianOracle>(2);
  const LatticeMembership m(z2, SubgroupSpec::parse(a, "a a b, b^-1 b^-1 b^-1 a"));
  // lattice spanned by (2,1) and (1,-3): index 7
  const CosetTable t = coset_bfs(m, *z2, 8);
  CHECK(t.size() == 7);
  for (const Word& u : words_up_to(a, 5)) {
    const auto e = z2->exponents(u);
    // (x,y) in the lattice iff 3x + y == 0 mod 7
    const long r = ((3 * e[0] + e[1]) % 7 + 7) % 7;
    CHECK(m.contains(u) == (r == 0));
  }
}
