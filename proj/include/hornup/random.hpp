#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"
#include "hornup/family.hpp"
#include "hornup/removal.hpp"

namespace hornup {

using Rng = std::mt19937_64;

/// Each member independently with probability p.
AttrSet random_subset(std::size_t n, Rng& rng, double p = 0.5);

/// rows x cols table, each cell set with probability `density`.
Context random_context(std::size_t rows, std::size_t cols, double density, Rng& rng);

/// Closure of 1..max_gens random generators under intersection, plus the full set.
MooreFamily random_family(std::size_t n, Rng& rng, std::size_t max_gens = 0);

/// Rejection-sampled family with an empty bottom and no binary equivalences.
MooreFamily random_reduced_family(std::size_t n, Rng& rng, std::size_t max_gens = 0);

/// Uniform subset of the universe outside f, or nothing when f is the powerset.
std::optional<AttrSet> random_new_set(const MooreFamily& f, Rng& rng);

/// A closed set of f that is meet-irreducible, uniformly among them.
std::optional<AttrSet> random_meet_irreducible(const MooreFamily& f, Rng& rng);

/// m arbitrary implications, bodies of size 1..max_body.
Basis random_basis(std::size_t n, std::size_t m, std::size_t max_body, Rng& rng);

/// Up to m nonempty edges over the vertex set {0..n-1}.
Hypergraph random_hypergraph(std::size_t n, std::size_t m, Rng& rng);

}  // namespace hornup
