#include <doctest.h>

#include "helpers.hpp"
#include "hornup/cd_update.hpp"
#include "hornup/closure.hpp"
#include "hornup/errors.hpp"
#include "hornup/oracle.hpp"
#include "hornup/random.hpp"

using namespace hornup;
using namespace hornup::test;

namespace {

const char* kUniverse = "a b c d e";
const char* kInput = "e -> d\na d -> e\nb c -> d\na b c -> e\n";

}  // namespace

TEST_CASE("split on a set") {
  const Basis b = basis(kUniverse, kInput);
  const Universe& u = b.universe();
  const SplitResult s = split_on_set(b, u.parse_set("a,b,c"));
  CHECK(s.failing_part == std::vector<Implication>{imp(u, "b,c", "d"), imp(u, "a,b,c", "e")});
  CHECK(s.true_part.size() == 2);
  CHECK(split_on_set(b, u.full()).failing_part.empty());
  CHECK(split_on_set(b, u.parse_set("a,b,c,d,e")).failing_part.empty());
  CHECK(split_on_set(b, u.parse_set("c,d")).failing_part.empty());
}

TEST_CASE("naive body-building and reduction") {
  const Basis b = basis(kUniverse, kInput);
  const AttrSet a = b.universe().parse_set("a,b,c");
  const Basis naive = naive_body_building(b, a);
  CHECK(naive == basis(kUniverse, "e -> d\na d -> e\nb c e -> d\na b c d -> e\n"));
  CHECK(reduce_to_canonical(naive) == basis(kUniverse, "e -> d\na d -> e\n"));
  CHECK(naive_body_building(b, b.universe().parse_set("c,d")) == b);
  CHECK(reduce_to_canonical(basis(kUniverse, "e -> d\na d -> e\n")) == basis(kUniverse, "e -> d\na d -> e\n"));
}

TEST_CASE("sectors with singleton differences") {
  const Basis b = basis(kUniverse, kInput);
  const Universe& u = b.universe();
  const SectorBasis sb = SectorBasis::build(b);
  const auto d = sb.sector(*u.index_of("d"));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == SectorEntry{u.parse_set("e"), AttrSet{}});
  CHECK(d[1] == SectorEntry{u.parse_set("b,c"), u.parse_set("e")});
  const auto e = sb.sector(*u.index_of("e"));
  REQUIRE(e.size() == 2);
  CHECK(e[0] == SectorEntry{u.parse_set("a,d"), AttrSet{}});
  CHECK(e[1] == SectorEntry{u.parse_set("a,b,c"), u.parse_set("d")});
  CHECK(sb.to_basis() == b);
  CHECK(sb.implication_count() == 4);

  CHECK(make_sector({u.parse_set("a,b")}) == std::vector<SectorEntry>{{u.parse_set("a,b"), AttrSet{}}});
  CHECK_THROWS_AS(SectorBasis::build(basis(kUniverse, "a -> b\na c -> b\n")), PreconditionError);
}

TEST_CASE("modified body-building on the sectors example") {
  const Basis b = basis(kUniverse, kInput);
  const AttrSet a = b.universe().parse_set("a,b,c");
  const SectorBasis sb = SectorBasis::build(b);
  const Basis got = modified_body_building(sb, a).to_basis();
  CHECK(got == basis(kUniverse, "e -> d\na d -> e\n"));
  CHECK(got == canonical_direct_from_family(extend_family(enumerate_family(b), a)));
  CHECK(she_update_cd(sb, a) == modified_body_building(sb, a));
  CHECK(she_update_cd(sb, b.universe().parse_set("c,d")) == sb);
  CHECK(she_update_cd(sb, b.universe().full()) == sb);
}

TEST_CASE("trivial family basis") {
  const Universe u = labels("a b");
  const SectorBasis sb = SectorBasis::of_trivial_family(u);
  CHECK(enumerate_family(sb.to_basis()).size() == 1);
  CHECK(she_update_cd(sb, AttrSet{0}).to_basis() == basis("a b", "-> a\n"));
}

TEST_CASE("random canonical direct updates") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const MooreFamily f = random_family(2 + seed % 7, rng);
    const auto a = random_new_set(f, rng);
    if (!a) continue;
    const Basis cd = canonical_direct_from_family(f);
    const MooreFamily g = extend_family(f, *a);
    const SectorBasis sb = SectorBasis::build(cd);
    const SectorBasis out = modified_body_building(sb, *a);
    CHECK(out.to_basis() == canonical_direct_from_family(g));
    CHECK(reduce_to_canonical(naive_body_building(cd, *a)) == out.to_basis());
    CHECK(enumerate_family(naive_body_building(cd, *a)) == g);
    CHECK(out == SectorBasis::build(out.to_basis()));
  }
}

TEST_CASE("singleton differences by recomputation") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const MooreFamily f = random_family(2 + seed % 7, rng);
    const SectorBasis sb = SectorBasis::build(canonical_direct_from_family(f));
    for (Attr d = 0; d < f.universe().size(); ++d) {
      const auto sector = sb.sector(d);
      for (const auto& entry : sector) {
        AttrSet e;
        for (const auto& other : sector) {
          const AttrSet diff = other.body - entry.body;
          if (diff.size() == 1) e |= diff;
        }
        CHECK(e == entry.singleton_diffs);
      }
    }
  }
}

TEST_CASE("reduction of random direct bases") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const MooreFamily f = random_family(2 + seed % 7, rng);
    const auto a = random_new_set(f, rng);
    if (!a) continue;
    // a direct basis with redundant members
    const Basis direct = naive_body_building(canonical_direct_from_family(f), *a);
    CHECK(reduce_to_canonical(direct) == canonical_direct_from_family(enumerate_family(direct)));
  }
}
