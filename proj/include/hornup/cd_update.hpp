#pragma once

#include <span>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"

namespace hornup {

/// Implications of a basis that hold on a set, and those that fail on it.
struct SplitResult {
  std::vector<Implication> true_part;
  std::vector<Implication> failing_part;
};

SplitResult split_on_set(const Basis& b, AttrSet a);

/// Keeps what holds on a; each failing C -> d becomes C u {x} -> d for every
/// x outside a u {d}. Direct in, direct out; not necessarily canonical.
Basis naive_body_building(const Basis& b, AttrSet a);

/// Drops every implication whose body strictly contains the body of another
/// implication with the same head (all-pairs comparison).
Basis reduce_to_canonical(const Basis& b);

/// One implication of a d-sector with its singleton-difference list:
/// e is in `singleton_diffs` iff some other body E of the sector has E \ body = {e}.
struct SectorEntry {
  AttrSet body;
  AttrSet singleton_diffs;

  friend bool operator==(const SectorEntry&, const SectorEntry&) = default;
};

/// A canonical direct basis split by head, bodies ordered by size.
class SectorBasis {
 public:
  SectorBasis() = default;

  /// Throws PreconditionError if some sector has nested bodies.
  static SectorBasis build(const Basis& cd);
  /// The basis of the one-set family {X}: every attribute follows from nothing.
  static SectorBasis of_trivial_family(const Universe& universe);

  const Universe& universe() const { return universe_; }
  std::span<const SectorEntry> sector(Attr d) const { return sectors_[d]; }
  std::size_t implication_count() const;
  Basis to_basis() const;

  /// Replaces one sector and recomputes its singleton differences.
  void assign_sector(Attr d, std::vector<AttrSet> bodies);

  friend bool operator==(const SectorBasis&, const SectorBasis&) = default;

 private:
  Universe universe_;
  std::vector<std::vector<SectorEntry>> sectors_;
};

inline SectorBasis build_sectors(const Basis& cd) { return SectorBasis::build(cd); }

/// Sorts bodies by size and fills in singleton differences for one sector.
std::vector<SectorEntry> make_sector(std::vector<AttrSet> bodies);

/// Failing (C, E_C) in sector d becomes C u {x} for x outside a u {d} u E_C.
/// The result is the canonical direct basis of the extended family; only
/// sectors that changed are rebuilt.
SectorBasis modified_body_building(const SectorBasis& sb, AttrSet a);

/// Single-set extension of a canonical direct basis; returns `sb` unchanged
/// when a already satisfies it.
SectorBasis she_update_cd(const SectorBasis& sb, AttrSet a);

}  // namespace hornup
