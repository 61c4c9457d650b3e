#pragma once

#include <cstddef>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"
#include "hornup/binary_order.hpp"

namespace hornup {

/// One replacement made by the lift: `target` (outside the new set) was
/// swapped for `replacement` (inside it).
struct LiftPair {
  Attr replacement = 0;
  Attr target = 0;

  friend bool operator==(const LiftPair&, const LiftPair&) = default;
};

struct LiftedImplication {
  AttrSet body;
  Attr head = 0;
  /// Every path that produced this implication; merged by body and head.
  std::vector<LiftPair> lifts;
  /// Body of the implication that was lifted (first path).
  AttrSet source_body;

  Implication implication() const { return {body, head}; }
};

/// The orders before and after adding a, with the targets and their replacements.
struct UpdateOrders {
  AttrSet added;
  /// >= from the whole binary part.
  BinaryOrder old_order;
  /// >=_A from the binary implications that hold on the new set.
  BinaryOrder new_order;
  /// Heads of binary implications failing on the new set.
  AttrSet targets;
  /// Indexed by attribute; empty for non-targets. Members of the new set
  /// above the target and minimal there.
  std::vector<AttrSet> replacements;

  AttrSet replacements_for(Attr x) const { return replacements[x]; }
};

/// Refinement scanning strategy. `filtered` uses the necessary conditions
/// to pick candidate refiners; `exhaustive` compares against everything.
enum class RefineMode { filtered, exhaustive };

/// Re-establishes a transitive binary part and resolves equivalences x <-> y
/// split by a (x outside, y inside): bodies get y for x, heads in {x, y} are
/// copied to the partner. Throws BinaryCycleError for equivalences a leaves
/// intact.
Basis prepare_for_update(const Basis& b, AttrSet a);

UpdateOrders compute_orders(const Basis& prepared, AttrSet a);

/// Replaces at least one target in each non-binary body by one of its
/// replacements, then drops body members below the new members under >=_A.
std::vector<LiftedImplication> a_lift(const Basis& prepared, const UpdateOrders& ord);

/// A lift removed by stage III together with the implication refining it.
struct RefinedLift {
  LiftedImplication lift;
  Implication refiner;
  /// Union of a-down_A \ x-down over the lift's pairs; the refiner meets it.
  AttrSet witness;
};

struct LiftFilterResult {
  std::vector<LiftedImplication> kept;
  std::vector<RefinedLift> removed;
};

/// Drops lifts that are >=_A-refined by a true binary implication, another
/// non-binary implication, or another lift.
LiftFilterResult filter_lift_refinements(const std::vector<LiftedImplication>& lifted, const Basis& prepared,
                                         const UpdateOrders& ord, RefineMode mode = RefineMode::filtered);

/// An implication produced by body-building a failing one.
struct BuiltImplication {
  Implication implication;
  Implication source;
  /// The minimal element used to extend (or replace into) the source body.
  Attr extension = 0;
  /// Members of the source body dropped because they lie below `extension`.
  AttrSet replaced;
  bool from_lift = false;
};

struct BodyBuildResult {
  /// Prepared implications that hold on the new set.
  std::vector<Implication> kept;
  std::vector<LiftedImplication> kept_lifts;
  std::vector<BuiltImplication> built;
  /// Replacements that dropped a lifted member (the `replacement` of a pair)
  /// from a lifted body. Other body members may still be replaced.
  std::size_t lift_replacements = 0;

  Basis to_basis(const Universe& universe) const;
};

/// Passes holding implications through; each failing A' -> d is extended by
/// every >=_A-minimal x of X \ (A u d-up_A), replacing the body members x lies above.
BodyBuildResult body_build_d(const Basis& prepared, const std::vector<LiftedImplication>& lifted,
                             const UpdateOrders& ord);

/// Removes built implications refined by anything, and lifts refined by
/// built implications.
Basis final_refine(const BodyBuildResult& built, const UpdateOrders& ord, const Universe& universe,
                   RefineMode mode = RefineMode::filtered);

/// Every intermediate of one D-basis update.
struct DUpdateTrace {
  bool already_closed = false;
  Basis prepared;
  UpdateOrders orders;
  std::vector<LiftedImplication> lifted;
  LiftFilterResult filtered;
  BodyBuildResult built;
  Basis result;
};

DUpdateTrace she_update_d_traced(const Basis& b, AttrSet a, RefineMode mode = RefineMode::filtered);

/// The D-basis of the family of b extended by a. When a already satisfies b,
/// b is returned unchanged.
Basis she_update_d(const Basis& b, AttrSet a, RefineMode mode = RefineMode::filtered);

}  // namespace hornup
