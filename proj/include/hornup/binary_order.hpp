#pragma once

#include <cstddef>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"

namespace hornup {

/// The relation y >= x read off binary implications y -> x, kept as
/// per-attribute down-sets and up-sets. Reflexive by construction.
class BinaryOrder {
 public:
  BinaryOrder() = default;
  /// Identity order on n attributes.
  explicit BinaryOrder(std::size_t n);

  /// Uses the binary implications of `b` as given (no closure).
  static BinaryOrder from_basis(const Basis& b);
  static BinaryOrder from_implications(std::size_t n, std::span<const Implication> imps);

  std::size_t attribute_count() const { return down_.size(); }

  /// Records upper >= lower.
  void add(Attr upper, Attr lower);

  bool geq(Attr upper, Attr lower) const { return down_[upper].contains(lower); }
  AttrSet down(Attr a) const { return down_[a]; }
  AttrSet up(Attr a) const { return up_[a]; }
  /// Y-down: everything below some member of y (y itself included).
  AttrSet down_set(AttrSet y) const;
  AttrSet up_set(AttrSet y) const;

  /// Members of `s` not strictly below another member of `s`.
  AttrSet maximal_elements(AttrSet s) const;
  AttrSet minimal_elements(AttrSet s) const;

  bool is_transitive() const;
  /// No two distinct attributes above each other.
  bool is_antisymmetric() const;
  BinaryOrder transitive_closure() const;

  friend bool operator==(const BinaryOrder&, const BinaryOrder&) = default;

 private:
  std::vector<AttrSet> down_;
  std::vector<AttrSet> up_;
};

/// True iff every element of z lies below some element of y.
inline bool refines(AttrSet z, AttrSet y, const BinaryOrder& ord) {
  return z.is_subset_of(ord.down_set(y));
}

}  // namespace hornup
