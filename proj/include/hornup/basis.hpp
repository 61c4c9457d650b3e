#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/universe.hpp"

namespace hornup {

/// Unit Horn clause body -> head.
struct Implication {
  AttrSet body;
  Attr head = 0;

  bool is_binary() const { return body.size() == 1; }
  /// True when the implication is satisfied by `s`.
  bool holds_on(AttrSet s) const { return !body.is_subset_of(s) || s.contains(head); }
  bool fails_on(AttrSet s) const { return !holds_on(s); }

  friend bool operator==(const Implication&, const Implication&) = default;
  /// Internal order: head, then body mask.
  friend auto operator<=>(const Implication& l, const Implication& r) {
    if (auto c = l.head <=> r.head; c != 0) return c;
    return l.body <=> r.body;
  }
};

/// Head first, then body as sorted index tuple: the text-serialization order.
bool canonical_less(const Implication& l, const Implication& r);

/// A set of unit implications over a universe. Stored sorted and duplicate-free.
class Basis {
 public:
  Basis() = default;
  /// Validates heads, bodies, and `head not in body`; duplicates collapse.
  explicit Basis(Universe universe, std::vector<Implication> implications = {});

  const Universe& universe() const { return universe_; }
  std::size_t attribute_count() const { return universe_.size(); }
  AttrSet full_set() const { return universe_.full(); }

  std::span<const Implication> implications() const { return implications_; }
  auto begin() const { return implications_.begin(); }
  auto end() const { return implications_.end(); }
  std::size_t size() const { return implications_.size(); }
  bool empty() const { return implications_.empty(); }
  bool contains(const Implication& imp) const;

  /// Implications with a one-element body.
  Basis binary_part() const;
  Basis nonbinary_part() const;
  /// The d-sector: every implication with head d.
  std::vector<Implication> sector(Attr d) const;

  Basis with(std::span<const Implication> extra) const;
  Basis without(const Implication& imp) const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Universe universe_;
  std::vector<Implication> implications_;
};

}  // namespace hornup
