#include <doctest.h>

#include "helpers.hpp"
#include "hornup/cd_update.hpp"
#include "hornup/closure.hpp"
#include "hornup/errors.hpp"
#include "hornup/oracle.hpp"
#include "hornup/random.hpp"
#include "hornup/removal.hpp"

using namespace hornup;
using namespace hornup::test;

TEST_CASE("removal of a meet-irreducible set") {
  const Basis cd = basis("m1 m2 x d", "d -> x\nm1 m2 x -> d\n");
  const Universe& u = cd.universe();
  const MooreFamily f = enumerate_family(cd);
  const AttrSet a = u.parse_set("m1,m2");
  CHECK(is_meet_irreducible(f, a));
  CHECK(upper_cover(f, a) == u.full());
  const Hypergraph h = complements_hypergraph(f, a);
  CHECK(h.vertices == a);
  CHECK(h.edges == std::vector<AttrSet>{u.parse_set("m1"), u.parse_set("m2")});
  CHECK(minimal_transversals(h) == std::vector<AttrSet>{a});
  CHECK(remove_closed_set(cd, f, a) == basis("m1 m2 x d", "d -> x\nm1 m2 -> x\nm1 m2 -> d\n"));
}

TEST_CASE("meet-reducible and unclosed sets") {
  const Basis cd = basis("m1 m2 x d", "d -> x\nm1 m2 x -> d\n");
  const Universe& u = cd.universe();
  const MooreFamily f = enumerate_family(cd);
  CHECK_FALSE(is_meet_irreducible(f, u.full()));
  CHECK_THROWS_AS(upper_cover(f, u.full()), PreconditionError);
  CHECK_THROWS_AS(upper_covers(f, u.parse_set("d")), PreconditionError);
  // {} is the meet of {m1} and {m2}
  const auto w = meet_witness(f, AttrSet{});
  REQUIRE(w);
  CHECK((w->first & w->second) == AttrSet{});
  try {
    (void)remove_closed_set(cd, f, AttrSet{});
    FAIL("no error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("intersection of") != std::string::npos);
  }
}

TEST_CASE("hypergraph edge cases") {
  const Universe u = labels("a b c");
  // bottom set with nothing closed below it
  const MooreFamily f(u, {AttrSet{0}, AttrSet{0, 1, 2}});
  const Hypergraph h = complements_hypergraph(f, AttrSet{0});
  CHECK(h.edges.empty());
  CHECK(minimal_transversals(h) == std::vector<AttrSet>{AttrSet{}});
  const Basis out = remove_closed_set(canonical_direct_from_family(f), f, AttrSet{0});
  CHECK(out == canonical_direct_from_family(f.without(AttrSet{0})));

  // with the empty set closed, its complement is an edge
  const MooreFamily g(u, {AttrSet{}, AttrSet{0, 1}, AttrSet{0, 1, 2}});
  CHECK(complements_hypergraph(g, AttrSet{0, 1}).edges == std::vector<AttrSet>{AttrSet{0, 1}});

  CHECK(minimal_transversals({AttrSet{0, 1, 2}, {AttrSet{0, 2}}}) == std::vector<AttrSet>{AttrSet{0}, AttrSet{2}});
  CHECK_THROWS_AS(minimal_transversals({AttrSet{0}, {AttrSet{}}}), PreconditionError);
  CHECK(minimize_edges({AttrSet{0, 1}, AttrSet{0}, AttrSet{0}, AttrSet{1, 2}}) ==
        std::vector<AttrSet>{AttrSet{0}, AttrSet{1, 2}});
}

TEST_CASE("transversals against exhaustive search") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const Hypergraph h = random_hypergraph(1 + seed % 12, 1 + seed % 7, rng);
    const auto got = minimal_transversals({h.vertices, minimize_edges(h.edges)});
    CHECK(got == minimal_transversals_exhaustive(h.vertices, h.edges));
    for (AttrSet t : got) {
      for (AttrSet e : h.edges) CHECK(t.intersects(e));
      for (AttrSet o : got) CHECK((o == t || !o.is_subset_of(t)));
    }
  }
}

TEST_CASE("random removals") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const MooreFamily f = random_family(2 + seed % 7, rng);
    const auto a = random_meet_irreducible(f, rng);
    if (!a) continue;
    const Basis cd = canonical_direct_from_family(f);
    const Basis out = remove_closed_set(cd, f, *a);
    CHECK(out == canonical_direct_from_family(f.without(*a)));
    CHECK(is_direct(cd.with(removal_implications(f, *a))));
    CHECK(she_update_cd(SectorBasis::build(out), *a).to_basis() == cd);

    // against the definitions
    const AttrSet cover = upper_cover(f, *a);
    for (AttrSet s : f) {
      if (a->is_proper_subset_of(s)) CHECK(cover.is_subset_of(s));
    }
    for (AttrSet s : f) {
      bool reducible = false;
      for (AttrSet p : f) {
        for (AttrSet q : f) {
          if (s.is_proper_subset_of(p) && s.is_proper_subset_of(q) && (p & q) == s) reducible = true;
        }
      }
      CHECK(is_meet_irreducible(f, s) == (s != f.full_set() && !reducible));
    }
  }
}
