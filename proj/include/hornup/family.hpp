#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/universe.hpp"

namespace hornup {

/// An explicit collection of closed sets. Stored sorted and duplicate-free.
/// A well-formed family contains the full set and is intersection-closed;
/// `is_closure_system` checks both.
class MooreFamily {
 public:
  MooreFamily() = default;
  MooreFamily(Universe universe, std::vector<AttrSet> sets);

  const Universe& universe() const { return universe_; }
  AttrSet full_set() const { return universe_.full(); }
  std::span<const AttrSet> sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  std::size_t size() const { return sets_.size(); }

  bool contains(AttrSet s) const;
  /// Intersection of all members containing `y`.
  AttrSet closure(AttrSet y) const;
  bool is_closure_system() const;

  MooreFamily without(AttrSet s) const;

  friend bool operator==(const MooreFamily&, const MooreFamily&) = default;

 private:
  Universe universe_;
  std::vector<AttrSet> sets_;
};

/// A formal context: one row (object intent) per line of a 0/1 table.
class Context {
 public:
  Context() = default;
  Context(Universe universe, std::vector<AttrSet> rows);

  const Universe& universe() const { return universe_; }
  std::span<const AttrSet> rows() const { return rows_; }
  std::size_t object_count() const { return rows_.size(); }

  /// Indices of rows equal to an earlier row. Duplicates are kept; the
  /// closure system does not change.
  std::vector<std::size_t> duplicate_rows() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  Universe universe_;
  std::vector<AttrSet> rows_;
};

}  // namespace hornup
