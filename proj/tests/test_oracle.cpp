#include <doctest.h>

#include <algorithm>
#include <queue>

#include "helpers.hpp"
#include "hornup/closure.hpp"
#include "hornup/errors.hpp"
#include "hornup/oracle.hpp"
#include "hornup/random.hpp"

using namespace hornup;
using namespace hornup::test;

namespace {

// reachability by breadth-first search from every vertex
std::vector<AttrSet> reach(std::size_t n, const std::vector<std::pair<Attr, Attr>>& edges) {
  std::vector<AttrSet> out(n);
  for (Attr s = 0; s < n; ++s) {
    std::queue<Attr> q;
    q.push(s);
    out[s].insert(s);
    while (!q.empty()) {
      const Attr v = q.front();
      q.pop();
      for (auto [from, to] : edges) {
        if (from == v && !out[s].contains(to)) {
          out[s].insert(to);
          q.push(to);
        }
      }
    }
  }
  return out;
}

// projection of a family onto the first n attributes, as a sorted set list
std::vector<AttrSet> project(const MooreFamily& f, std::size_t n) {
  std::vector<AttrSet> sets;
  for (AttrSet s : f) sets.push_back(s & AttrSet::full(n));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

}  // namespace

TEST_CASE("canonical direct basis of a small system") {
  const Basis b = basis("x y d a a'", "a -> x\na' -> y\nx y -> d\n");
  const Universe& u = b.universe();
  const Basis cd = canonical_direct_from_family(enumerate_family(b));
  for (const char* body : {"x,y", "a,y", "x,a'", "a,a'"}) CHECK(cd.contains(imp(u, body, "d")));
  CHECK(cd.sector(*u.index_of("d")).size() == 4);
  CHECK(has_antichain_sectors(cd));

  const Basis d = d_basis_from_cd(cd);
  CHECK(d == b);
}

TEST_CASE("canonical direct basis of the powerset is empty") {
  std::vector<AttrSet> all;
  for (std::uint64_t m = 0; m < 16; ++m) all.push_back(AttrSet::from_bits(m));
  CHECK(canonical_direct_from_family(MooreFamily(Universe::indexed(4), all)).empty());
}

TEST_CASE("canonical direct basis round-trips its family") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const MooreFamily f = random_family(2 + seed % 7, rng);
    const Basis cd = canonical_direct_from_family(f);
    CHECK(is_direct(cd));
    CHECK(enumerate_family(cd) == f);
    CHECK(has_antichain_sectors(cd));
  }
}

TEST_CASE("canonical direct basis from a context matches the family route") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Context k = random_context(3 + seed % 5, 3 + seed % 6, 0.5, rng);
    CHECK(canonical_direct_from_context(k) == canonical_direct_from_family(enumerate_family(k)));
  }
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(canonical_direct_from_family(MooreFamily(Universe::indexed(15), {AttrSet::full(15)})),
                  UniverseTooLarge);
  CHECK_THROWS_AS(d_basis_from_cd(basis("a b c", "a -> c\na b -> c\n")), PreconditionError);
  CHECK_THROWS_AS(d_basis_from_cd(basis("a b c", "a -> b\nb -> c\n")), UnpreparedBasis);
}

TEST_CASE("D-basis without binary part is the canonical direct basis") {
  const Basis cd = basis("a b c d", "a b -> c\nb d -> c\na d -> b\n");
  CHECK(d_basis_from_cd(cd) == cd);
}

TEST_CASE("D-basis is b-direct, refinement-free, and minimal") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const MooreFamily f = random_reduced_family(3 + seed % 6, rng);
    const Basis cd = canonical_direct_from_family(f);
    const Basis d = d_basis_from_cd(cd);
    CHECK(is_bdirect(d));
    CHECK(is_refinement_free(d));
    CHECK(enumerate_family(d) == f);
    CHECK(std::all_of(d.begin(), d.end(), [&](const Implication& i) { return cd.contains(i); }));
    // the binary part is fixed as transitive; every non-binary member is needed
    for (const auto& i : d) {
      if (i.is_binary()) continue;
      const Basis smaller = d.without(i);
      CHECK((enumerate_family(smaller) != f || !is_bdirect(smaller)));
    }
  }
}

TEST_CASE("transitive closure of the binary part") {
  const Basis b = basis("y a' a_y", "a_y -> a'\na' -> y\n");
  const Basis closed = transitive_close_binary(b);
  CHECK(closed.contains(imp(b.universe(), "a_y", "y")));
  CHECK(transitive_close_binary(closed) == closed);
  CHECK_THROWS_AS(transitive_close_binary(basis("a b", "a -> b\nb -> a\n")), BinaryCycleError);
  CHECK_NOTHROW(transitive_close_binary_allow_cycles(basis("a b", "a -> b\nb -> a\n")));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + seed % 8;
    std::vector<std::pair<Attr, Attr>> edges;
    std::vector<Implication> imps;
    for (Attr i = 0; i < n; ++i) {
      for (Attr j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) {
          edges.emplace_back(i, j);
          imps.push_back({AttrSet{i}, j});
        }
      }
    }
    const Basis closed_b = transitive_close_binary(Basis(Universe::indexed(n), imps));
    const auto want = reach(n, edges);
    for (Attr i = 0; i < n; ++i) {
      for (Attr j = 0; j < n; ++j) {
        if (i != j) CHECK(closed_b.contains({AttrSet{i}, j}) == want[i].contains(j));
      }
    }
  }
}

TEST_CASE("reduced and standard forms") {
  const Basis b = basis("b1 b2 d", "b1 b2 -> d\n");
  const Basis r = to_reduced(b, {{"a", AttrSet{0, 1}}});
  const Universe& u = r.universe();
  CHECK(u.size() == 4);
  CHECK(r.contains(imp(u, "b1,b2", "a")));
  CHECK(r.contains(imp(u, "a", "b1")));
  CHECK(r.contains(imp(u, "a", "b2")));
  CHECK(project(enumerate_family(r), 3) == project(enumerate_family(b), 3));
  CHECK(to_reduced(b, {}) == b);
  CHECK_THROWS(to_reduced(b, {{"d", AttrSet{0, 1}}}));
  CHECK_THROWS(to_reduced(b, {{"a", AttrSet{}}}));

  const Basis lit = to_reduced(b, {{"a", AttrSet{0, 1}}}, EquivalenceDirection::literal);
  CHECK(lit.contains(imp(lit.universe(), "b1", "a")));

  const Basis standard = basis("z1 z2 z3 d u", "z1 z2 -> d\nz3 d -> u\n");
  CHECK(to_standard(standard) == standard);
}

TEST_CASE("reduced form preserves the projected family") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t n = 3 + seed % 5;
    const Basis b = to_standard(canonical_direct_from_family(random_reduced_family(n, rng)));
    const std::size_t k = b.attribute_count();
    if (k < 2) continue;
    // an irredundant pair: neither member follows from the other
    AttrSet members;
    for (int tries = 0; tries < 50 && members.empty(); ++tries) {
      const Attr x = static_cast<Attr>(rng() % k);
      const Attr y = static_cast<Attr>(rng() % k);
      if (x == y || closure_forward(b, AttrSet{x}).contains(y) || closure_forward(b, AttrSet{y}).contains(x)) continue;
      members = AttrSet{x, y};
    }
    if (members.empty()) continue;
    const Basis r = to_reduced(b, {{"q", members}});
    CHECK(project(enumerate_family(r), k) == project(enumerate_family(b), k));
    const Basis s = to_standard(r);
    CHECK(s.universe() == b.universe());
    CHECK(enumerate_family(s) == enumerate_family(b));
  }
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(enumerate_family(basis("a b c", "a -> b\n"))));
  CHECK_FALSE(is_reduced(enumerate_family(basis("a b c", "a -> b\nb -> a\n"))));
  CHECK_FALSE(is_reduced(MooreFamily(labels("a b"), {AttrSet{0}, AttrSet{0, 1}})));
}
