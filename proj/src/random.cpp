#include "hornup/random.hpp"

#include <algorithm>

#include "hornup/closure.hpp"
#include "hornup/oracle.hpp"

namespace hornup {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

AttrSet random_subset(std::size_t n, Rng& rng, double p) {
  std::bernoulli_distribution coin(p);
  AttrSet s;
  for (Attr i = 0; i < n; ++i) {
    if (coin(rng)) s.insert(i);
  }
  return s;
}

Context random_context(std::size_t rows, std::size_t cols, double density, Rng& rng) {
  std::vector<AttrSet> table;
  table.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) table.push_back(random_subset(cols, rng, density));
  return Context(Universe::indexed(cols), std::move(table));
}

MooreFamily random_family(std::size_t n, Rng& rng, std::size_t max_gens) {
  if (max_gens == 0) max_gens = 2 * n;
  const std::size_t gens = uniform(rng, 1, max_gens);
  const double p = std::uniform_real_distribution<double>(0.3, 0.8)(rng);
  return enumerate_family(random_context(gens, n, p, rng));
}

MooreFamily random_reduced_family(std::size_t n, Rng& rng, std::size_t max_gens) {
  while (true) {
    MooreFamily f = random_family(n, rng, max_gens);
    if (is_reduced(f)) return f;
  }
}

std::optional<AttrSet> random_new_set(const MooreFamily& f, Rng& rng) {
  const std::size_t n = f.universe().size();
  if (n < 64 && f.size() == (std::size_t{1} << n)) return std::nullopt;
  while (true) {
    const AttrSet s = random_subset(n, rng);
    if (!f.contains(s)) return s;
  }
}

std::optional<AttrSet> random_meet_irreducible(const MooreFamily& f, Rng& rng) {
  std::vector<AttrSet> candidates;
  for (AttrSet s : f) {
    if (is_meet_irreducible(f, s)) candidates.push_back(s);
  }
  if (candidates.empty()) return std::nullopt;
  return candidates[uniform(rng, 0, candidates.size() - 1)];
}

Basis random_basis(std::size_t n, std::size_t m, std::size_t max_body, Rng& rng) {
  std::vector<Implication> imps;
  if (n >= 2) {
    for (std::size_t i = 0; i < m; ++i) {
      const Attr head = static_cast<Attr>(uniform(rng, 0, n - 1));
      const std::size_t size = uniform(rng, 1, std::min(max_body, n - 1));
      AttrSet body;
      while (body.size() < size) {
        const Attr a = static_cast<Attr>(uniform(rng, 0, n - 1));
        if (a != head) body.insert(a);
      }
      imps.push_back({body, head});
    }
  }
  return Basis(Universe::indexed(n), std::move(imps));
}

Hypergraph random_hypergraph(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<AttrSet> edges;
  const double p = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
  for (std::size_t i = 0; i < m; ++i) {
    AttrSet e = random_subset(n, rng, p);
    if (e.empty()) e.insert(static_cast<Attr>(uniform(rng, 0, n - 1)));
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return {AttrSet::full(n), std::move(edges)};
}

}  // namespace hornup
