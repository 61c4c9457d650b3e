#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"
#include "hornup/binary_order.hpp"
#include "hornup/family.hpp"

namespace hornup {

// Brute-force ground truth. Nothing here calls into the update modules.

inline constexpr std::size_t kOracleFamilyLimit = 14;
inline constexpr std::size_t kOracleContextLimit = 20;

/// All C -> d with d in phi(C) \ C and C inclusion-minimal for d.
Basis canonical_direct_from_family(const MooreFamily& f);
/// Same basis, computed from the context's closure operator.
Basis canonical_direct_from_context(const Context& k);

/// Within each sector the bodies form an inclusion antichain.
bool has_antichain_sectors(const Basis& b);

/// Keeps the binary part and drops every non-binary C -> d refined by
/// another D -> d of `cd` (D inside C-down). When C and D refine each other
/// (possible only with binary equivalences) the smaller body mask survives. Throws PreconditionError if `cd`
/// has nested bodies in a sector, UnpreparedBasis if its binary part is not
/// transitive.
Basis d_basis_from_cd(const Basis& cd);

/// No two distinct Z -> d, Y -> d with Y non-binary and Z inside Y-down.
bool is_refinement_free(const Basis& b, const BinaryOrder& ord);
inline bool is_refinement_free(const Basis& b) {
  return is_refinement_free(b, BinaryOrder::from_basis(b));
}

/// Replaces the binary part by its transitive closure. Throws
/// BinaryCycleError when two attributes become equivalent.
Basis transitive_close_binary(const Basis& b);

/// Binary closure that tolerates equivalences.
Basis transitive_close_binary_allow_cycles(const Basis& b);

/// Attribute equivalence a <-> B with |B| >= 2, a new label.
struct Equivalence {
  std::string label;
  AttrSet members;
};

enum class EquivalenceDirection {
  /// B -> a and a -> b for every b in B.
  consistent,
  /// B -> a and b -> a for every b in B. Makes B -> a redundant; kept for
  /// comparison only.
  literal,
};

/// Standard system to reduced: appends each equivalent attribute and its
/// defining implications, then closes the binary part.
Basis to_reduced(const Basis& b, const std::vector<Equivalence>& equivs,
                 EquivalenceDirection direction = EquivalenceDirection::consistent);

/// Reduced to standard: repeatedly removes the highest-index attribute a with
/// a in phi(phi(a) \ {a}), substituting its equivalent set into bodies and
/// heads. The family of the result is the projection of the family of `b`.
Basis to_standard(const Basis& b);

/// No two distinct attributes with equal closures, and the empty set closed.
bool is_reduced(const MooreFamily& f);

/// Every inclusion-minimal set meeting all edges, by checking every subset
/// of `vertices`.
std::vector<AttrSet> minimal_transversals_exhaustive(AttrSet vertices, const std::vector<AttrSet>& edges);

}  // namespace hornup
