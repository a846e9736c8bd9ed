#include <doctest.h>

#include <cstdint>
#include <vector>

#include "hodef/domains.hpp"
#include "hodef/infer.hpp"
#include "hodef/universe.hpp"

using namespace hodef;

// Independent oracle: counts monotone boolean functions on the subset
// lattice of an n-element set by filtering all 2^(2^n) candidates.
// Nothing below touches the antichain enumerator.
static std::int64_t count_monotone_oracle(int n) {
  const int points = 1 << n;  // subsets of [n]
  std::int64_t count = 0;
  // f encoded as a bitmask: bit s = f(subset s)
  for (std::uint64_t f = 0; f < (1ull << points); ++f) {
    bool monotone = true;
    for (int s = 0; s < points && monotone; ++s)
      for (int t = 0; t < points && monotone; ++t)
        if ((s & t) == s && ((f >> s) & 1) > ((f >> t) & 1)) monotone = false;
    if (monotone) ++count;
  }
  return count;
}

TEST_CASE("monotone-function oracle reproduces the known series") {
  CHECK(count_monotone_oracle(0) == 2);
  CHECK(count_monotone_oracle(1) == 3);
  CHECK(count_monotone_oracle(2) == 6);
  CHECK(count_monotone_oracle(3) == 20);
  CHECK(count_monotone_oracle(4) == 168);
}

static Program load(const std::string& text) {
  auto res = load_program(text);
  REQUIRE(res.ok());
  return std::move(*res.program);
}

static const ArgType kI = ArgType::iota();
static const ArgType kO = ArgType::o();
static const ArgType kIO = ArgType::arrow(kI, kO);
static const ArgType kHI = ArgType::arrow(kIO, kO);

TEST_CASE("second-order domain sizes match the oracle") {
  // programs with 1, 2, 3 individual constants and a (i -> o) -> o predicate
  const char* sources[] = {
      "p(Q) :- Q(a).",
      "p(Q) :- Q(a). q(b).",
      "p(Q) :- Q(a). q(b). q(c).",
  };
  for (int n = 1; n <= 3; ++n) {
    Program p = load(sources[n - 1]);
    ActiveUniverse u(p, 1);
    DomainCache doms(u);
    CHECK(static_cast<std::int64_t>(doms.domain(kHI).size()) ==
          count_monotone_oracle(n));
    // first-order sanity: i -> o has one value per subset of constants
    CHECK(doms.domain(kIO).size() == (1u << n));
  }
}

TEST_CASE("third-order domain size matches the oracle shape") {
  // |[(i->o)->(i->o)->o]| = monotone functions on the product of two
  // squares, i.e. on the 4-element boolean lattice
  Program p = load("r(P, Q) :- P(a), Q(b).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  ArgType t = ArgType::arrow(kIO, ArgType::arrow(kIO, kO));
  CHECK(static_cast<std::int64_t>(doms.domain(t).size()) ==
        count_monotone_oracle(4));
}

TEST_CASE("base domains") {
  Program p = load("p(a). q(b).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  CHECK(doms.domain(kI).size() == 2);
  REQUIRE(doms.domain(kO).size() == 2);
  CHECK(doms.domain(kO)[0].truth_value() == false);
  CHECK(doms.domain(kO)[1].truth_value() == true);
}

TEST_CASE("domains are sorted and duplicate free") {
  Program p = load("p(Q) :- Q(a). q(b).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  for (const ArgType& t : u.types()) {
    const auto& d = doms.domain(t);
    for (std::size_t i = 1; i < d.size(); ++i)
      CHECK(d[i - 1].compare(d[i]) < 0);
  }
}

TEST_CASE("antichain canonicalization drops dominated tuples") {
  SemValue a = SemValue::individual(Expr::ind_const("a"));
  SemValue b = SemValue::individual(Expr::ind_const("b"));
  SemValue sa = SemValue::rel({kI}, {{a}});          // {a}
  SemValue sab = SemValue::rel({kI}, {{a}, {b}});    // {a,b}
  CHECK(leq(sa, sab));
  CHECK_FALSE(leq(sab, sa));

  // requiring {a} already covers requiring {a,b}
  SemValue v = SemValue::rel({kIO}, {{sa}, {sab}});
  CHECK(v.minimal_true().size() == 1);
  CHECK(v.minimal_true()[0][0].compare(sa) == 0);
}

TEST_CASE("relation order is pointwise domination") {
  SemValue a = SemValue::individual(Expr::ind_const("a"));
  SemValue b = SemValue::individual(Expr::ind_const("b"));
  SemValue sa = SemValue::rel({kI}, {{a}});
  SemValue sb = SemValue::rel({kI}, {{b}});
  SemValue sab = SemValue::rel({kI}, {{a}, {b}});

  SemValue needs_a = SemValue::rel({kIO}, {{sa}});
  SemValue needs_either = SemValue::rel({kIO}, {{sa}, {sb}});
  CHECK(leq(needs_a, needs_either));
  CHECK_FALSE(leq(needs_either, needs_a));

  CHECK(rel_true(needs_either, {sb}));
  CHECK(rel_true(needs_either, {sab}));
  CHECK_FALSE(rel_true(needs_a, {sb}));
}

TEST_CASE("application curries one coordinate at a time") {
  SemValue a = SemValue::individual(Expr::ind_const("a"));
  SemValue b = SemValue::individual(Expr::ind_const("b"));
  // r = {(a, a), (a, b)}
  SemValue r = SemValue::rel({kI, kI}, {{a, a}, {a, b}});
  SemValue ra = apply(r, a);
  CHECK(ra.kind() == SemValue::Kind::Rel);
  CHECK(ra.minimal_true().size() == 2);
  SemValue rb = apply(r, b);
  CHECK(rb.minimal_true().empty());

  SemValue raa = apply(ra, a);
  CHECK(raa.kind() == SemValue::Kind::Truth);
  CHECK(raa.truth_value());
}

TEST_CASE("application respects the domain order") {
  Program p = load("p(Q) :- Q(a). q(b).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  const auto& dom_hi = doms.domain(kHI);
  const auto& dom_io = doms.domain(kIO);
  for (const SemValue& f : dom_hi)
    for (const SemValue& g : dom_hi) {
      if (!leq(f, g)) continue;
      for (const SemValue& x : dom_io) {
        CHECK(leq(apply(f, x), apply(g, x)));
      }
    }
  // monotone in the argument as well
  for (const SemValue& f : dom_hi)
    for (const SemValue& x : dom_io)
      for (const SemValue& y : dom_io) {
        if (!leq(x, y)) continue;
        CHECK(leq(apply(f, x), apply(f, y)));
      }
}

TEST_CASE("bottom and top bound every domain value") {
  Program p = load("p(Q) :- Q(a). q(b).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  for (const ArgType& t : u.types()) {
    if (!t.is_predicate()) continue;
    SemValue bot = bottom_value(t);
    SemValue top = top_value(t, u);
    for (const SemValue& v : doms.domain(t)) {
      CHECK(leq(bot, v));
      CHECK(leq(v, top));
    }
  }
}

TEST_CASE("leq is a partial order on enumerated domains") {
  Program p = load("p(Q) :- Q(a). q(b).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  const auto& d = doms.domain(kHI);
  for (const SemValue& x : d) CHECK(leq(x, x));
  for (const SemValue& x : d)
    for (const SemValue& y : d) {
      if (leq(x, y) && leq(y, x)) CHECK(x.compare(y) == 0);
      for (const SemValue& z : d)
        if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));
    }
}

TEST_CASE("tuple space covers the full cartesian product") {
  Program p = load("r(P, Q) :- P(a), Q(b).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  ArgType t = ArgType::arrow(kIO, ArgType::arrow(kIO, kO));
  const auto& tuples = doms.tuple_space(t);
  CHECK(tuples.size() == 16);  // 4 subsets of {a,b} per coordinate
  for (const auto& tup : tuples) CHECK(tup.size() == 2);
}

TEST_CASE("the empty product has exactly one empty tuple") {
  Program p = load("p(a).");
  ActiveUniverse u(p, 1);
  DomainCache doms(u);
  const auto& tuples = doms.tuple_space(kO);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0].empty());
}

TEST_CASE("domain cap trips before enumeration explodes") {
  Program p = load("p(Q) :- Q(a). q(b). q(c).");
  ActiveUniverse u(p, 1);
  Caps caps;
  caps.domain_values = 10;
  DomainCache doms(u, caps);
  CHECK_THROWS_AS(doms.domain(kHI), DomainOverflowError);
}
