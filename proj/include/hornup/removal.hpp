#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"
#include "hornup/family.hpp"

namespace hornup {

/// Vertex set plus nonempty, duplicate-free edges.
struct Hypergraph {
  AttrSet vertices;
  std::vector<AttrSet> edges;
};

/// Closed strict supersets of a that are minimal. Throws if a is not in f.
std::vector<AttrSet> upper_covers(const MooreFamily& f, AttrSet a);

/// a is in f, differs from the full set, and has exactly one upper cover.
bool is_meet_irreducible(const MooreFamily& f, AttrSet a);

/// Two closed strict supersets whose intersection is a, if any.
std::optional<std::pair<AttrSet, AttrSet>> meet_witness(const MooreFamily& f, AttrSet a);

/// The unique upper cover. Throws PreconditionError if a is not meet-irreducible.
AttrSet upper_cover(const MooreFamily& f, AttrSet a);

/// Edges a \ Z for every closed Z strictly inside a, minimized.
Hypergraph complements_hypergraph(const MooreFamily& f, AttrSet a);

/// Removes edges that contain another edge and duplicates.
std::vector<AttrSet> minimize_edges(std::vector<AttrSet> edges);

/// Berge multiplication with minimization after each edge. Sorted antichain.
/// Throws PreconditionError on an empty edge.
std::vector<AttrSet> minimal_transversals(const Hypergraph& h);

/// Y -> d for every minimal transversal Y and every d of the upper cover outside a.
std::vector<Implication> removal_implications(const MooreFamily& f, AttrSet a);

/// Canonical direct basis of f without a, from the canonical direct basis
/// of f. Throws PreconditionError unless a is meet-irreducible in f.
Basis remove_closed_set(const Basis& cd, const MooreFamily& f, AttrSet a);

}  // namespace hornup
