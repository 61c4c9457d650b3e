#include <doctest.h>

#include "helpers.hpp"
#include "hornup/cd_update.hpp"
#include "hornup/closure.hpp"
#include "hornup/errors.hpp"
#include "hornup/oracle.hpp"
#include "hornup/random.hpp"

using namespace hornup;
using namespace hornup::test;

TEST_CASE("one pass misses a chained closure") {
  const Basis b = basis("z1 z2 z3 d u", "z1 z2 -> d\nz3 d -> u\n");
  const Universe& u = b.universe();
  const AttrSet z = u.parse_set("z1,z2,z3");
  CHECK(closure_forward(b, z) == u.full());
  CHECK(closure_direct_pass(b, z) == u.parse_set("z1,z2,z3,d"));
  CHECK_FALSE(is_direct(b));

  const AttrSet a = u.parse_set("z1,z2,z3,u");
  const Basis naive = naive_body_building(b, a);
  CHECK(naive == basis("z1 z2 z3 d u", "z3 d -> u\n"));
  // the naive update admits z although it is not an intersection with a
  CHECK(std::all_of(naive.begin(), naive.end(), [&](const Implication& i) { return i.holds_on(z); }));
  CHECK_FALSE(extend_family(enumerate_family(b), a).contains(z));
}

TEST_CASE("forward chaining agrees with the family") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Basis b = random_basis(2 + seed % 7, seed % 10, 3, rng);
    const MooreFamily f = enumerate_family(b);
    CHECK(f.is_closure_system());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << b.attribute_count()); ++m) {
      const AttrSet y = AttrSet::from_bits(m);
      CHECK(closure_forward(b, y) == f.closure(y));
    }
  }
}

TEST_CASE("b-direct closure") {
  const Basis b = basis("x y d a a'", "a -> x\na' -> y\nx y -> d\n");
  const Universe& u = b.universe();
  CHECK(closure_bdirect(b, u.parse_set("a,a'")) == u.parse_set("a,a',x,y,d"));
  CHECK(is_bdirect(b));
  CHECK_FALSE(is_direct(b));
  CHECK_THROWS_AS(closure_bdirect(basis("a b c", "a -> b\nb -> c\n"), AttrSet{0}), UnpreparedBasis);
  const auto v = bdirect_verdict(basis("a b c", "a -> b\nb -> c\n"));
  CHECK_FALSE(v.binary_transitive);
  CHECK_FALSE(v.holds());
}

TEST_CASE("families from contexts") {
  const Universe u = labels("a b c");
  const Context k(u, {AttrSet{0, 1}, AttrSet{1, 2}});
  const MooreFamily f = enumerate_family(k);
  CHECK(f == MooreFamily(u, {AttrSet{1}, AttrSet{0, 1}, AttrSet{1, 2}, AttrSet{0, 1, 2}}));
  CHECK(closure_from_context(k, AttrSet{0}) == AttrSet{0, 1});
  CHECK(closure_from_context(k, AttrSet{0, 2}) == u.full());
  CHECK(ClosureOperator(k)(AttrSet{2}) == AttrSet{1, 2});
}

TEST_CASE("extended family and operator") {
  const Universe u = labels("a b c");
  const MooreFamily f(u, {AttrSet{0, 1, 2}, AttrSet{0, 1}});
  const AttrSet a{1, 2};
  const MooreFamily g = extend_family(f, a);
  CHECK(g == MooreFamily(u, {AttrSet{1}, AttrSet{1, 2}, AttrSet{0, 1}, AttrSet{0, 1, 2}}));
  const ClosureOperator phi{f};
  for (std::uint64_t m = 0; m < 8; ++m) {
    const AttrSet y = AttrSet::from_bits(m);
    CHECK(extended_operator(phi, a, y) == g.closure(y));
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_family(Basis(Universe::indexed(21))), UniverseTooLarge);
}

TEST_CASE("canonical direct bases are direct") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const MooreFamily f = random_family(3 + seed % 6, rng);
    CHECK(is_direct(canonical_direct_from_family(f)));
  }
}
